// Right panel: wind-related organizations with Web/Twitter link buttons.
// A button renders only when the matching attribute is present.

import type { ApiClient } from "../api.js";
import { showError } from "../banner.js";
import { instanceViewModel } from "../viewmodel.js";

const ORGANIZATION_ROOT = "WindRelatedOrganization";

export interface InstancesPanel {
  refresh(): Promise<void>;
}

export function createInstancesPanel(container: HTMLElement, api: ApiClient): InstancesPanel {
  const heading = document.createElement("h2");
  heading.textContent = "Wind-Related Organizations";
  const list = document.createElement("div");
  list.className = "instance-list";
  container.append(heading, list);

  function linkButton(text: string, cls: string, url: string): HTMLAnchorElement {
    const link = document.createElement("a");
    link.className = `btn ${cls}`;
    link.textContent = text;
    link.href = url;
    link.target = "_blank";
    link.rel = "noopener";
    return link;
  }

  async function refresh(): Promise<void> {
    try {
      const records = await api.getInstances(ORGANIZATION_ROOT, true);
      list.replaceChildren();
      if (records.length === 0) {
        const placeholder = document.createElement("p");
        placeholder.className = "placeholder";
        placeholder.textContent = "No organizations in the ontology yet.";
        list.append(placeholder);
        return;
      }
      for (const record of records) {
        const vm = instanceViewModel(record);
        const row = document.createElement("div");
        row.className = "instance-row";
        row.dataset.instanceId = vm.id;
        const name = document.createElement("div");
        name.className = "instance-name";
        name.textContent = vm.name;
        const meta = document.createElement("div");
        meta.className = "instance-meta";
        meta.textContent = vm.country ? `${vm.conceptId} · ${vm.country}` : vm.conceptId;
        const buttons = document.createElement("div");
        buttons.className = "instance-buttons";
        if (vm.buttons.web) buttons.append(linkButton("Web", "btn-web", vm.buttons.web));
        if (vm.buttons.twitter) buttons.append(linkButton("Twitter", "btn-twitter", vm.buttons.twitter));
        row.append(name, meta, buttons);
        list.append(row);
      }
    } catch (error) {
      showError(container, String(error), () => void refresh());
    }
  }

  return { refresh };
}
