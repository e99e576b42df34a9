// Left panel: the concept taxonomy as a collapsible tree. Clicking a
// concept shows its lexical entries and weights in the detail box.

import type { ApiClient } from "../api.js";
import { showError } from "../banner.js";
import type { ConceptTreeNode } from "../types.js";
import { formatWeight } from "../viewmodel.js";

export interface TreePanel {
  refresh(): Promise<void>;
  selectedConcept(): string | null;
}

export function createTreePanel(
  container: HTMLElement,
  api: ApiClient,
  onSelect?: (id: string) => void,
): TreePanel {
  let selected: string | null = null;

  const heading = document.createElement("h2");
  heading.textContent = "Concepts";
  const treeHost = document.createElement("div");
  treeHost.className = "tree-host";
  const detail = document.createElement("div");
  detail.className = "concept-detail";
  detail.textContent = "Select a concept to see its lexicon.";
  container.append(heading, treeHost, detail);

  function renderDetail(node: ConceptTreeNode): void {
    detail.replaceChildren();
    const title = document.createElement("h3");
    title.textContent = node.id;
    detail.append(title);
    if (node.lexicon.length === 0) {
      const empty = document.createElement("p");
      empty.textContent = "No lexical entries.";
      detail.append(empty);
      return;
    }
    const table = document.createElement("table");
    table.className = "lexicon-table";
    const head = document.createElement("tr");
    for (const column of ["Term", "Language", "Kind", "Weight"]) {
      const th = document.createElement("th");
      th.textContent = column;
      head.append(th);
    }
    table.append(head);
    for (const entry of node.lexicon) {
      const row = document.createElement("tr");
      for (const value of [entry.term, entry.language, entry.kind, formatWeight(entry.weight)]) {
        const td = document.createElement("td");
        td.textContent = value;
        row.append(td);
      }
      table.append(row);
    }
    detail.append(table);
  }

  function renderNode(node: ConceptTreeNode): HTMLElement {
    const label = document.createElement("span");
    label.className = "concept-label";
    label.textContent = node.id;
    label.dataset.conceptId = node.id;
    label.addEventListener("click", (event) => {
      event.preventDefault();
      event.stopPropagation();
      selected = node.id;
      renderDetail(node);
      onSelect?.(node.id);
    });

    if (node.children.length === 0) {
      const leaf = document.createElement("div");
      leaf.className = "tree-leaf";
      leaf.append(label);
      return leaf;
    }
    const details = document.createElement("details");
    details.className = "tree-branch";
    const summary = document.createElement("summary");
    summary.append(label);
    details.append(summary);
    const children = document.createElement("div");
    children.className = "tree-children";
    for (const child of node.children) {
      children.append(renderNode(child));
    }
    details.append(children);
    return details;
  }

  async function refresh(): Promise<void> {
    try {
      const roots = await api.getConcepts();
      treeHost.replaceChildren(...roots.map(renderNode));
    } catch (error) {
      showError(container, String(error), () => void refresh());
    }
  }

  return { refresh, selectedConcept: () => selected };
}
