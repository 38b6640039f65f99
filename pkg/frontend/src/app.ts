/** Wires the page together: one form, one model, full re-render per change. */

import { ApiError, type ApiClient } from "./api.js";
import {
  renderBanner,
  renderDetail,
  renderGraph,
  renderLegends,
  renderNav,
  renderSummary,
} from "./render.js";
import {
  applyError,
  applyPending,
  applyResult,
  applySelect,
  initialModel,
  RequestSequencer,
  type ViewModel,
} from "./state.js";

export interface App {
  submit(phrases: string[]): Promise<void>;
  select(id: string): Promise<void>;
  readonly model: ViewModel;
}

export function createApp(root: HTMLElement, api: ApiClient): App {
  root.innerHTML = `
    <form id="query-form">
      <input id="phrase-input" type="text" autocomplete="off"
             placeholder="research topic, e.g. message passing networks" />
      <button id="submit-btn" type="submit" disabled>generate path</button>
    </form>
    <div id="banner" hidden></div>
    <div id="summary"></div>
    <main id="panels">
      <nav id="nav-panel" aria-label="reading order"></nav>
      <section id="graph-panel">
        <svg id="path-svg" xmlns="http://www.w3.org/2000/svg"></svg>
        <div id="legends"></div>
      </section>
      <aside id="detail-panel"></aside>
    </main>
  `;

  const form = root.querySelector("#query-form") as HTMLFormElement;
  const input = root.querySelector("#phrase-input") as HTMLInputElement;
  const button = root.querySelector("#submit-btn") as HTMLButtonElement;
  const banner = root.querySelector("#banner") as HTMLElement;
  const summary = root.querySelector("#summary") as HTMLElement;
  const navPanel = root.querySelector("#nav-panel") as HTMLElement;
  const svg = root.querySelector("#path-svg") as unknown as SVGSVGElement;
  const legends = root.querySelector("#legends") as HTMLElement;
  const detail = root.querySelector("#detail-panel") as HTMLElement;

  let model = initialModel();
  const sequencer = new RequestSequencer();

  function rerender(): void {
    renderBanner(banner, model);
    renderSummary(summary, model.result);
    renderNav(navPanel, model);
    renderGraph(svg, model);
    renderLegends(legends, model);
  }

  function setModel(next: ViewModel): void {
    model = next;
    rerender();
  }

  async function fillDetail(id: string): Promise<void> {
    try {
      renderDetail(detail, await api.paper(id));
    } catch (err) {
      const message = err instanceof Error ? err.message : String(err);
      renderDetail(detail, null, `could not load paper: ${message}`);
    }
  }

  async function select(id: string): Promise<void> {
    const next = applySelect(model, id);
    if (next === model) return;
    setModel(next);
    const chosen = root.querySelector(`#path-svg .node[data-id="${id}"]`);
    if (chosen && typeof (chosen as HTMLElement).scrollIntoView === "function") {
      (chosen as HTMLElement).scrollIntoView({ block: "nearest", inline: "nearest" });
    }
    await fillDetail(id);
  }

  async function submit(phrases: string[]): Promise<void> {
    const seq = sequencer.next();
    setModel(applyPending(model));
    try {
      const result = await api.query({ phrases });
      if (!sequencer.accept(seq)) return; // a newer query superseded this one
      setModel(applyResult(model, result));
      if (model.selection) {
        await fillDetail(model.selection);
      } else {
        renderDetail(detail, null);
      }
    } catch (err) {
      if (!sequencer.accept(seq)) return;
      if (err instanceof ApiError && err.isNoResults) {
        setModel(applyError(model, err.message, true));
      } else {
        const message = err instanceof Error ? err.message : String(err);
        setModel(applyError(model, message));
      }
    }
  }

  input.addEventListener("input", () => {
    button.disabled = input.value.trim() === "";
  });
  form.addEventListener("submit", (event) => {
    event.preventDefault();
    const phrase = input.value.trim();
    if (phrase) void submit([phrase]);
  });

  // One delegated listener each; items carry their paper id in data-id.
  navPanel.addEventListener("click", (event) => {
    const item = (event.target as HTMLElement).closest(".nav-item") as HTMLElement | null;
    if (item?.dataset.id) void select(item.dataset.id);
  });
  svg.addEventListener("click", (event) => {
    const node = (event.target as Element).closest(".node") as SVGGElement | null;
    if (node?.dataset.id) void select(node.dataset.id);
  });

  rerender();
  renderDetail(detail, null);

  return {
    submit,
    select,
    get model() {
      return model;
    },
  };
}
