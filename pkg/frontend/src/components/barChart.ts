// C1: per-year bar chart (SVG). Hovering a bar reveals the exact count
// via a <title> tooltip; bars carry data attributes for tests.

import type { YearHistogram } from "../api";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 640;
const HEIGHT = 220;
const PAD = 24;

export interface BarChart {
  el: HTMLElement;
  svg: SVGSVGElement;
  render(hist: YearHistogram): void;
}

export function createBarChart(title: string): BarChart {
  const el = document.createElement("section");
  el.className = "panel bar-chart";
  const heading = document.createElement("h3");
  heading.textContent = title;
  el.appendChild(heading);

  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
  svg.setAttribute("role", "img");
  el.appendChild(svg);

  const empty = document.createElement("p");
  empty.className = "empty-note";
  empty.textContent = "No data for the current filters.";
  empty.hidden = true;
  el.appendChild(empty);

  function render(hist: YearHistogram): void {
    svg.textContent = "";
    const buckets = hist.buckets;
    empty.hidden = buckets.length > 0;
    if (!buckets.length) return;

    const maxCount = Math.max(...buckets.map((b) => b.count), 1);
    const slot = (WIDTH - 2 * PAD) / buckets.length;
    const barWidth = Math.max(1, slot * 0.8);

    buckets.forEach((bucket, i) => {
      const height = ((HEIGHT - 2 * PAD) * bucket.count) / maxCount;
      const rect = document.createElementNS(SVG_NS, "rect");
      rect.setAttribute("x", String(PAD + i * slot + (slot - barWidth) / 2));
      rect.setAttribute("y", String(HEIGHT - PAD - height));
      rect.setAttribute("width", String(barWidth));
      rect.setAttribute("height", String(height));
      rect.setAttribute("class", "bar");
      rect.dataset.year = String(bucket.year);
      rect.dataset.count = String(bucket.count);
      const tooltip = document.createElementNS(SVG_NS, "title");
      tooltip.textContent = `${bucket.year}: ${bucket.count}`;
      rect.appendChild(tooltip);
      svg.appendChild(rect);
    });

    const firstYear = buckets[0].year;
    const lastYear = buckets[buckets.length - 1].year;
    for (const [year, anchor, x] of [
      [firstYear, "start", PAD],
      [lastYear, "end", WIDTH - PAD],
    ] as const) {
      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(x));
      label.setAttribute("y", String(HEIGHT - 6));
      label.setAttribute("text-anchor", anchor);
      label.setAttribute("class", "axis-label");
      label.textContent = String(year);
      svg.appendChild(label);
    }
  }

  return { el, svg, render };
}
