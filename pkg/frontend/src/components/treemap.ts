// C4: top-k treemap with an adjustable k text field. Tile area is
// proportional to weight (slice-and-dice layout); long labels collapse
// with ellipsis and keep the full text in the title attribute.

import type { TopKList } from "../api";

export interface Treemap {
  el: HTMLElement;
  canvas: HTMLElement;
  kInput: HTMLInputElement;
  render(list: TopKList): void;
  onKChange(cb: (k: number) => void): void;
}

export function createTreemap(title: string, initialK: number): Treemap {
  const el = document.createElement("section");
  el.className = "panel treemap";

  const header = document.createElement("div");
  header.className = "panel-header";
  const heading = document.createElement("h3");
  heading.textContent = title;
  header.appendChild(heading);

  const kLabel = document.createElement("label");
  kLabel.textContent = "k ";
  const kInput = document.createElement("input");
  kInput.type = "text";
  kInput.size = 4;
  kInput.value = String(initialK);
  kInput.setAttribute("aria-label", "top k");
  kLabel.appendChild(kInput);
  header.appendChild(kLabel);
  el.appendChild(header);

  const canvas = document.createElement("div");
  canvas.className = "treemap-canvas";
  el.appendChild(canvas);

  const empty = document.createElement("p");
  empty.className = "empty-note";
  empty.textContent = "No data for the current filters.";
  empty.hidden = true;
  el.appendChild(empty);

  interface Area {
    x: number;
    y: number;
    w: number;
    h: number;
  }

  function layout(weights: number[], area: Area, horizontal: boolean): Area[] {
    // Slice-and-dice: split the area by weight share, alternating
    // direction for readability.
    if (weights.length === 0) return [];
    if (weights.length === 1) return [area];
    const total = weights.reduce((a, b) => a + b, 0) || weights.length;
    const share = (total ? weights[0] / total : 1 / weights.length) || 1 / total;
    const first: Area = horizontal
      ? { x: area.x, y: area.y, w: area.w * share, h: area.h }
      : { x: area.x, y: area.y, w: area.w, h: area.h * share };
    const rest: Area = horizontal
      ? { x: area.x + first.w, y: area.y, w: area.w - first.w, h: area.h }
      : { x: area.x, y: area.y + first.h, w: area.w, h: area.h - first.h };
    return [first, ...layout(weights.slice(1), rest, !horizontal)];
  }

  function render(list: TopKList): void {
    canvas.textContent = "";
    empty.hidden = list.entries.length > 0;
    const areas = layout(
      list.entries.map((e) => Math.max(e.weight, 0)),
      { x: 0, y: 0, w: 100, h: 100 },
      true,
    );
    list.entries.forEach((entry, i) => {
      const tile = document.createElement("div");
      tile.className = "tile";
      const area = areas[i];
      tile.style.left = `${area.x}%`;
      tile.style.top = `${area.y}%`;
      tile.style.width = `${area.w}%`;
      tile.style.height = `${area.h}%`;
      tile.dataset.label = entry.label;
      tile.dataset.weight = String(entry.weight);
      tile.title = `${entry.label}: ${entry.weight}`;
      const text = document.createElement("span");
      text.className = "tile-label";
      text.textContent = entry.label;
      tile.appendChild(text);
      canvas.appendChild(tile);
    });
  }

  function onKChange(cb: (k: number) => void): void {
    kInput.addEventListener("change", () => {
      const k = Number(kInput.value);
      if (Number.isInteger(k) && k >= 1) cb(k);
    });
  }

  return { el, canvas, kInput, render, onKChange };
}
