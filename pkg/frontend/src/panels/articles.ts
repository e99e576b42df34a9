// Center panel: automatically extracted scholarly articles, paged, each
// row linking to the publisher page and explaining its matched concepts.

import type { ApiClient } from "../api.js";
import { showError } from "../banner.js";
import type { ArticleRecord } from "../types.js";
import { articleLink, formatWeight, hasNext, hasPrevious, pageLabel } from "../viewmodel.js";

export interface ArticlesPanel {
  refresh(): Promise<void>;
  state(): { offset: number; limit: number };
}

export function createArticlesPanel(container: HTMLElement, api: ApiClient, limit = 10): ArticlesPanel {
  let offset = 0;

  const heading = document.createElement("h2");
  heading.textContent = "Scholarly Articles Related to Wind Energy";
  const list = document.createElement("div");
  list.className = "article-list";
  const pager = document.createElement("div");
  pager.className = "pager";
  const prev = document.createElement("button");
  prev.type = "button";
  prev.textContent = "Previous";
  prev.className = "pager-prev";
  const label = document.createElement("span");
  label.className = "pager-label";
  const next = document.createElement("button");
  next.type = "button";
  next.textContent = "Next";
  next.className = "pager-next";
  pager.append(prev, label, next);
  container.append(heading, list, pager);

  prev.addEventListener("click", () => {
    offset = Math.max(0, offset - limit);
    void refresh();
  });
  next.addEventListener("click", () => {
    offset = offset + limit;
    void refresh();
  });

  function renderRow(record: ArticleRecord): HTMLElement {
    const row = document.createElement("div");
    row.className = "article-row";
    const { text, url } = articleLink(record);
    const title = document.createElement("div");
    title.className = "article-title";
    if (url) {
      const link = document.createElement("a");
      link.href = url;
      link.target = "_blank";
      link.rel = "noopener";
      link.textContent = text;
      title.append(link);
    } else {
      title.textContent = text;
    }
    const explanation = document.createElement("div");
    explanation.className = "article-explanation";
    const concepts = record.result.matchedConcepts
      .map((c) => `${c.conceptId} (${formatWeight(c.weight)})`)
      .join(", ");
    explanation.textContent = `score ${formatWeight(record.result.score)} — ${concepts}`;
    row.append(title, explanation);
    return row;
  }

  async function refresh(): Promise<void> {
    try {
      const page = await api.getArticles(offset, limit);
      // A stale offset (store shrank or we paged past the end) snaps back.
      if (page.total > 0 && offset >= page.total) {
        offset = Math.max(0, (Math.ceil(page.total / limit) - 1) * limit);
        return refresh();
      }
      list.replaceChildren();
      if (page.total === 0) {
        const placeholder = document.createElement("p");
        placeholder.className = "placeholder";
        placeholder.textContent = "No extracted articles yet. Ingest a corpus to fill this panel.";
        list.append(placeholder);
      } else {
        for (const record of page.items) {
          list.append(renderRow(record));
        }
      }
      label.textContent = pageLabel(page.offset, page.limit, page.total);
      prev.disabled = !hasPrevious(page.offset);
      next.disabled = !hasNext(page.offset, page.limit, page.total);
    } catch (error) {
      showError(container, String(error), () => void refresh());
    }
  }

  return { refresh, state: () => ({ offset, limit }) };
}
