// UI contract acceptance: a real server is seeded with the demo corpus
// and every rendered number is compared against the API payload it came
// from. Requires python3 with the scholardash package installed.

import { spawn, spawnSync, type ChildProcess } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api";
import { createApp } from "../src/main";
import { createBarChart } from "../src/components/barChart";
import { createBoxplot } from "../src/components/boxplot";
import { createFilterPanel, DEBOUNCE_MS } from "../src/components/filterPanel";
import { createGrid } from "../src/components/grid";
import { createLdaExplorer } from "../src/components/ldaExplorer";
import { createTreemap } from "../src/components/treemap";
import { emptyFilter, filterToParams } from "../src/state";

const PORT = 8763;
const BASE = `http://127.0.0.1:${PORT}`;

const pythonAvailable = spawnSync("python3", ["-c", "import scholardash"]).status === 0;
const suite = pythonAvailable ? describe : describe.skip;

let server: ChildProcess | null = null;
let workDir = "";
const api = new ApiClient(BASE);

async function waitForServer(timeoutMs = 30_000): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${BASE}/healthz`);
      if (response.ok) return;
    } catch {
      // keep polling
    }
    await new Promise((resolve) => setTimeout(resolve, 200));
  }
  throw new Error("server did not come up");
}

suite("UI contract against the live API", () => {
  beforeAll(async () => {
    workDir = mkdtempSync(join(tmpdir(), "scholardash-ui-"));
    const store = join(workDir, "store.json");
    const seeded = spawnSync("python3", ["-m", "scholardash.cli", "demo", "--store", store, "--records", "300"]);
    expect(seeded.status).toBe(0);
    server = spawn(
      "python3",
      ["-m", "scholardash.cli", "serve", "--store", store, "--listen", `127.0.0.1:${PORT}`, "--workers", "2"],
      { stdio: "ignore" },
    );
    await waitForServer();
  });

  afterAll(() => {
    server?.kill();
    if (workDir) rmSync(workDir, { recursive: true, force: true });
  });

  it("C1 totals equal the per-year payload", async () => {
    const payload = await api.perYear("papers", new URLSearchParams());
    const chart = createBarChart("per year");
    chart.render(payload);
    const bars = [...chart.svg.querySelectorAll("rect.bar")];
    expect(bars.length).toBe(payload.buckets.length);
    bars.forEach((bar, i) => {
      expect(Number((bar as SVGRectElement).dataset.count)).toBe(payload.buckets[i].count);
      expect(Number((bar as SVGRectElement).dataset.year)).toBe(payload.buckets[i].year);
    });
  });

  it("grid rows equal the grid payload", async () => {
    const payload = await api.grid("papers", new URLSearchParams(), 1, 20);
    const grid = createGrid("details");
    grid.render(payload);
    const renderedRows = [...grid.table.querySelectorAll("tbody tr")];
    expect(renderedRows.length).toBe(payload.rows.length);
    renderedRows.forEach((tr, i) => {
      const titleCell = tr.querySelector('td[data-column="title"]')!;
      expect(titleCell.textContent).toBe(String(payload.rows[i].title));
      const citationsCell = tr.querySelector('td[data-column="citations"]')!;
      expect(citationsCell.textContent).toBe(String(payload.rows[i].citations));
    });
  });

  it("boxplot numbers equal the distribution payload", async () => {
    const payload = await api.distribution("papers", new URLSearchParams(), "citations");
    const plot = createBoxplot("distribution");
    plot.render(payload);
    const group = plot.svg.querySelector(".box-group") as SVGGElement;
    expect(Number(group.dataset.min)).toBe(payload.min);
    expect(Number(group.dataset.q25)).toBe(payload.q25);
    expect(Number(group.dataset.median)).toBe(payload.median);
    expect(Number(group.dataset.q75)).toBe(payload.q75);
    expect(Number(group.dataset.max)).toBe(payload.max);
  });

  it("treemap tile count equals the top-k payload", async () => {
    const payload = await api.topK("venues", new URLSearchParams(), 6, "papers");
    const map = createTreemap("top k", 6);
    map.render(payload);
    const tiles = [...map.canvas.querySelectorAll(".tile")];
    expect(tiles.length).toBe(payload.entries.length);
    expect(tiles.length).toBeLessThanOrEqual(6);
    tiles.forEach((tile, i) => {
      expect((tile as HTMLElement).dataset.label).toBe(payload.entries[i].label);
    });
  });

  it("paper types dropdown offers the six pre-set classes", async () => {
    const panel = createFilterPanel(api);
    document.body.appendChild(panel.el);
    const input = panel.el.querySelector('[data-facet-input="paper_types"]') as HTMLInputElement;
    input.dispatchEvent(new Event("focus"));
    await new Promise((resolve) => setTimeout(resolve, DEBOUNCE_MS + 400));
    const options = [...panel.el.querySelectorAll('[data-facet="paper_types"] .suggestions li')].map(
      (li) => (li as HTMLElement).dataset.value,
    );
    expect(new Set(options)).toEqual(
      new Set(["article", "proceedings", "book", "incollection", "phdthesis", "mastersthesis"]),
    );
    panel.el.remove();
  });

  it("selecting an LDA topic draws red bars within blue; term selection reorders", async () => {
    const job = await api.submitJob({ filters: {}, k: 4, iterations: 40, seed: 2 });
    const deadline = Date.now() + 60_000;
    let state = job.state as string;
    while (state !== "done" && Date.now() < deadline) {
      await new Promise((resolve) => setTimeout(resolve, 200));
      state = (await api.getJob(job.job_id)).state;
      if (state === "failed") throw new Error("training failed");
    }
    expect(state).toBe("done");

    const explorer = createLdaExplorer(api, 100);
    document.body.appendChild(explorer.el);
    await explorer.loadModel(job.job_id);
    expect(explorer.mapSvg.querySelectorAll("circle")).toHaveLength(4);

    const orderBefore = [...explorer.termList.querySelectorAll(".term-row")].map(
      (row) => (row as HTMLElement).dataset.term ?? "",
    );
    expect(orderBefore.length).toBeGreaterThan(0);
    expect(orderBefore.length).toBeLessThanOrEqual(30);

    explorer.selectedTopic = 0;
    await explorer.refresh();
    const rows = [...explorer.termList.querySelectorAll(".term-row")];
    expect(rows.length).toBeGreaterThan(0);
    for (const row of rows) {
      const el = row as HTMLElement;
      expect(Number(el.dataset.inTopic)).toBeLessThanOrEqual(Number(el.dataset.overall) + 1e-9);
      const blue = el.querySelector(".bar-overall") as HTMLElement;
      const red = el.querySelector(".bar-in-topic") as HTMLElement;
      expect(parseFloat(red.style.width)).toBeLessThanOrEqual(parseFloat(blue.style.width) + 1e-9);
    }

    explorer.selectedTopic = null;
    explorer.selectedTerm = orderBefore[2];
    await explorer.refresh();
    const orderAfter = [...explorer.termList.querySelectorAll(".term-row")].map(
      (row) => (row as HTMLElement).dataset.term ?? "",
    );
    expect(orderAfter[0]).toBe(orderBefore[2]);
    expect(orderAfter).not.toEqual(orderBefore);
    explorer.el.remove();
  });

  it("the assembled app renders API numbers after apply", async () => {
    const root = document.createElement("div");
    document.body.appendChild(root);
    const app = createApp(root, api);
    await app.refresh();

    const filter = emptyFilter();
    filter.year_min = "2005";
    const expected = await api.perYear("papers", filterToParams(filter));

    const panel = root.querySelector(".filter-panel")!;
    const minInput = panel.querySelector('[data-range-input="year_min"]') as HTMLInputElement;
    minInput.value = "2005";
    minInput.dispatchEvent(new Event("input"));
    (panel.querySelector("button.apply") as HTMLButtonElement).click();
    await new Promise((resolve) => setTimeout(resolve, 600));

    const bars = [...root.querySelectorAll(".bar-chart rect.bar")];
    expect(bars.map((b) => Number((b as SVGRectElement).dataset.count))).toEqual(
      expected.buckets.map((b) => b.count),
    );
    expect(location.search).toContain("f.year_min=2005");
    root.remove();
  });
});
