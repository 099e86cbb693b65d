// C3: five-number boxplot. The hover tooltip lists min, q25, median,
// q75 and max exactly as served.

import type { DistributionSummary } from "../api";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 640;
const HEIGHT = 120;
const PAD = 40;
const MID = HEIGHT / 2;

export interface Boxplot {
  el: HTMLElement;
  svg: SVGSVGElement;
  render(dist: DistributionSummary | null): void;
}

export function createBoxplot(title: string): Boxplot {
  const el = document.createElement("section");
  el.className = "panel boxplot";
  const heading = document.createElement("h3");
  heading.textContent = title;
  el.appendChild(heading);

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
  el.appendChild(svg);

  const empty = document.createElement("p");
  empty.className = "empty-note";
  empty.textContent = "No data for the current filters.";
  empty.hidden = true;
  el.appendChild(empty);

  function line(x1: number, y1: number, x2: number, y2: number, cls: string): SVGLineElement {
    const ln = document.createElementNS(SVG_NS, "line");
    ln.setAttribute("x1", String(x1));
    ln.setAttribute("y1", String(y1));
    ln.setAttribute("x2", String(x2));
    ln.setAttribute("y2", String(y2));
    ln.setAttribute("class", cls);
    return ln;
  }

  function render(dist: DistributionSummary | null): void {
    svg.textContent = "";
    empty.hidden = dist !== null;
    if (dist === null) return;

    const span = dist.max - dist.min || 1;
    const scale = (value: number) => PAD + ((WIDTH - 2 * PAD) * (value - dist.min)) / span;

    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("class", "box-group");
    for (const [key, value] of Object.entries(dist)) {
      group.dataset[key] = String(value);
    }
    const tooltip = document.createElementNS(SVG_NS, "title");
    tooltip.textContent =
      `min ${dist.min}, 25% ${dist.q25}, median ${dist.median}, ` +
      `75% ${dist.q75}, max ${dist.max}`;
    group.appendChild(tooltip);

    group.appendChild(line(scale(dist.min), MID, scale(dist.q25), MID, "whisker"));
    group.appendChild(line(scale(dist.q75), MID, scale(dist.max), MID, "whisker"));
    group.appendChild(line(scale(dist.min), MID - 12, scale(dist.min), MID + 12, "whisker-cap"));
    group.appendChild(line(scale(dist.max), MID - 12, scale(dist.max), MID + 12, "whisker-cap"));

    const box = document.createElementNS(SVG_NS, "rect");
    box.setAttribute("x", String(scale(dist.q25)));
    box.setAttribute("y", String(MID - 22));
    box.setAttribute("width", String(Math.max(1, scale(dist.q75) - scale(dist.q25))));
    box.setAttribute("height", "44");
    box.setAttribute("class", "box");
    group.appendChild(box);

    group.appendChild(line(scale(dist.median), MID - 22, scale(dist.median), MID + 22, "median"));
    svg.appendChild(group);
  }

  return { el, svg, render };
}
