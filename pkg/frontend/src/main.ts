// Boot: three-panel layout (tree left, articles center, organizations
// right) plus the interactive categorizer under the articles panel. All
// state is derived from API responses; a reload reproduces the same view.

import { ApiClient } from "./api.js";
import { createArticlesPanel } from "./panels/articles.js";
import { createCategorizePanel } from "./panels/categorize.js";
import { createInstancesPanel } from "./panels/instances.js";
import { createTreePanel } from "./panels/tree.js";

function apiBase(): string {
  const fromQuery = new URLSearchParams(window.location.search).get("api");
  if (fromQuery) return fromQuery.replace(/\/$/, "");
  return "";
}

export function boot(root: HTMLElement): void {
  const api = new ApiClient(apiBase());

  root.replaceChildren();
  const header = document.createElement("header");
  const title = document.createElement("h1");
  title.textContent = "Wind Energy Surveillance Portal";
  header.append(title);

  const layout = document.createElement("main");
  layout.className = "layout";
  const left = document.createElement("section");
  left.className = "panel panel-tree";
  const center = document.createElement("section");
  center.className = "panel-column";
  const articlesHost = document.createElement("div");
  articlesHost.className = "panel panel-articles";
  const categorizeHost = document.createElement("div");
  categorizeHost.className = "panel panel-categorize";
  center.append(articlesHost, categorizeHost);
  const right = document.createElement("section");
  right.className = "panel panel-instances";
  layout.append(left, center, right);
  root.append(header, layout);

  const tree = createTreePanel(left, api);
  const articles = createArticlesPanel(articlesHost, api);
  const instances = createInstancesPanel(right, api);
  createCategorizePanel(categorizeHost, api);

  void tree.refresh();
  void articles.refresh();
  void instances.refresh();
}

const rootElement = document.getElementById("app");
if (rootElement) {
  boot(rootElement);
}
