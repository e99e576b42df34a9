// What-if panel: paste a title/abstract/keywords, see the verdict with
// per-concept weights, adjust the threshold, resubmit.

import { ApiClient, ApiError } from "../api.js";
import type { CategorizationResult } from "../types.js";
import { formatWeight, parseKeywords, scoreSummary, verdictText } from "../viewmodel.js";

export interface CategorizePanel {
  submit(): Promise<void>;
  lastResult(): CategorizationResult | null;
}

export function createCategorizePanel(container: HTMLElement, api: ApiClient): CategorizePanel {
  let last: CategorizationResult | null = null;

  const heading = document.createElement("h2");
  heading.textContent = "Try the Categorizer";
  const form = document.createElement("form");
  form.className = "categorize-form";

  const title = input("text", "title", "Title");
  const abstractText = textarea("abstractText", "Abstract");
  const keywords = input("text", "keywords", "Keywords (comma-separated)");
  const threshold = input("number", "threshold", "Threshold");
  threshold.value = "1.0";
  threshold.step = "0.1";
  threshold.min = "0.1";

  const submitButton = document.createElement("button");
  submitButton.type = "submit";
  submitButton.textContent = "Categorize";

  const errorBox = document.createElement("div");
  errorBox.className = "form-error";
  const resultBox = document.createElement("div");
  resultBox.className = "categorize-result";

  form.append(
    labelled("Title", title),
    labelled("Abstract", abstractText),
    labelled("Keywords", keywords),
    labelled("Threshold", threshold),
    submitButton,
  );
  container.append(heading, form, errorBox, resultBox);

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void submit();
  });

  function renderResult(result: CategorizationResult): void {
    resultBox.replaceChildren();
    const verdict = document.createElement("div");
    verdict.className = result.relevant ? "verdict verdict-relevant" : "verdict verdict-irrelevant";
    verdict.textContent = verdictText(result);
    const summary = document.createElement("div");
    summary.className = "score-summary";
    summary.textContent = scoreSummary(result);
    const chips = document.createElement("div");
    chips.className = "concept-chips";
    for (const contribution of result.matchedConcepts) {
      const chip = document.createElement("span");
      chip.className = "chip";
      chip.textContent = `${contribution.conceptId} ${formatWeight(contribution.weight)}`;
      chips.append(chip);
    }
    resultBox.append(verdict, summary, chips);
  }

  async function submit(): Promise<void> {
    errorBox.textContent = "";
    const thresholdValue = Number(threshold.value);
    try {
      last = await api.categorize({
        title: title.value,
        abstractText: abstractText.value,
        keywords: parseKeywords(keywords.value),
        threshold: Number.isFinite(thresholdValue) && threshold.value !== "" ? thresholdValue : undefined,
      });
      renderResult(last);
    } catch (error) {
      // 400s (schema/threshold problems) surface inline, not as a banner.
      errorBox.textContent = error instanceof ApiError ? error.message : String(error);
    }
  }

  return { submit, lastResult: () => last };
}

function input(type: string, name: string, placeholder: string): HTMLInputElement {
  const element = document.createElement("input");
  element.type = type;
  element.name = name;
  element.placeholder = placeholder;
  return element;
}

function textarea(name: string, placeholder: string): HTMLTextAreaElement {
  const element = document.createElement("textarea");
  element.name = name;
  element.placeholder = placeholder;
  element.rows = 5;
  return element;
}

function labelled(text: string, control: HTMLElement): HTMLLabelElement {
  const label = document.createElement("label");
  const caption = document.createElement("span");
  caption.textContent = text;
  label.append(caption, control);
  return label;
}
