// LDA topics board: intertopic circles on the left, term bars on the
// right. Clicking a circle loads that topic's relevant terms (red bars
// over the blue overall bars); clicking a term re-ranks the panel and
// resizes circles by P(topic|term); the lambda slider refetches.

import type { ApiClient, TermPanel, TopicCircle } from "../api";

const SVG_NS = "http://www.w3.org/2000/svg";
const MAP_SIZE = 420;

export interface LdaExplorer {
  el: HTMLElement;
  trainButton: HTMLButtonElement;
  status: HTMLElement;
  mapSvg: SVGSVGElement;
  termList: HTMLElement;
  lambdaSlider: HTMLInputElement;
  setFilterProvider(provider: () => URLSearchParams): void;
  modelId: string | null;
  selectedTopic: number | null;
  selectedTerm: string | null;
  loadModel(modelId: string): Promise<void>;
  refresh(): Promise<void>;
}

export function createLdaExplorer(api: ApiClient, pollMs = 400): LdaExplorer {
  const el = document.createElement("section");
  el.className = "lda-explorer";

  const controls = document.createElement("div");
  controls.className = "lda-controls";
  const trainButton = document.createElement("button");
  trainButton.textContent = "Train topics on current selection";
  const status = document.createElement("span");
  status.className = "lda-status";
  status.textContent = "no model yet";
  const lambdaLabel = document.createElement("label");
  lambdaLabel.textContent = "λ ";
  const lambdaSlider = document.createElement("input");
  lambdaSlider.type = "range";
  lambdaSlider.min = "0";
  lambdaSlider.max = "1";
  lambdaSlider.step = "0.05";
  lambdaSlider.value = "0.6";
  lambdaLabel.appendChild(lambdaSlider);
  controls.append(trainButton, lambdaLabel, status);
  el.appendChild(controls);

  const boards = document.createElement("div");
  boards.className = "lda-boards";
  const mapSvg = document.createElementNS(SVG_NS, "svg");
  mapSvg.setAttribute("viewBox", `0 0 ${MAP_SIZE} ${MAP_SIZE}`);
  mapSvg.setAttribute("class", "lda-map");
  const termList = document.createElement("div");
  termList.className = "term-list";
  boards.append(mapSvg, termList);
  el.appendChild(boards);

  let filterProvider: () => URLSearchParams = () => new URLSearchParams();
  let circles: TopicCircle[] = [];

  const explorer: LdaExplorer = {
    el,
    trainButton,
    status,
    mapSvg,
    termList,
    lambdaSlider,
    modelId: null,
    selectedTopic: null,
    selectedTerm: null,
    setFilterProvider(provider) {
      filterProvider = provider;
    },
    loadModel,
    refresh,
  };

  async function loadModel(modelId: string): Promise<void> {
    explorer.modelId = modelId;
    explorer.selectedTopic = null;
    explorer.selectedTerm = null;
    circles = (await api.topicMap(modelId)).topics;
    await refresh();
  }

  function drawCircles(weights: number[] | null): void {
    mapSvg.textContent = "";
    if (!circles.length) return;
    const xs = circles.map((c) => c.x);
    const ys = circles.map((c) => c.y);
    const spanX = Math.max(...xs) - Math.min(...xs) || 1;
    const spanY = Math.max(...ys) - Math.min(...ys) || 1;
    const pad = 50;
    const scaleX = (x: number) => pad + ((MAP_SIZE - 2 * pad) * (x - Math.min(...xs))) / spanX;
    const scaleY = (y: number) => pad + ((MAP_SIZE - 2 * pad) * (y - Math.min(...ys))) / spanY;

    circles.forEach((topic) => {
      const share = weights ? weights[topic.topic] : topic.marginal;
      const radius = 8 + 60 * Math.sqrt(Math.max(share, 0));
      const circle = document.createElementNS(SVG_NS, "circle");
      circle.setAttribute("cx", String(scaleX(topic.x)));
      circle.setAttribute("cy", String(scaleY(topic.y)));
      circle.setAttribute("r", String(radius));
      circle.setAttribute("class", "topic-circle" + (explorer.selectedTopic === topic.topic ? " selected" : ""));
      circle.dataset.topic = String(topic.topic);
      circle.dataset.radius = String(radius);
      const tooltip = document.createElementNS(SVG_NS, "title");
      tooltip.textContent = `topic ${topic.topic + 1}: ${(topic.marginal * 100).toFixed(1)}% of tokens`;
      circle.appendChild(tooltip);
      circle.addEventListener("click", () => {
        explorer.selectedTopic = explorer.selectedTopic === topic.topic ? null : topic.topic;
        explorer.selectedTerm = null;
        void refresh();
      });
      mapSvg.appendChild(circle);

      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(scaleX(topic.x)));
      label.setAttribute("y", String(scaleY(topic.y) + 4));
      label.setAttribute("text-anchor", "middle");
      label.setAttribute("class", "topic-label");
      label.textContent = String(topic.topic + 1);
      mapSvg.appendChild(label);
    });
  }

  function drawTerms(panel: TermPanel): void {
    termList.textContent = "";
    const maxOverall = Math.max(...panel.terms.map((t) => t.overall), 1);
    for (const row of panel.terms) {
      const item = document.createElement("div");
      item.className = "term-row";
      item.dataset.term = row.term;
      item.dataset.overall = String(row.overall);
      if (row.in_topic !== null) item.dataset.inTopic = String(row.in_topic);

      const label = document.createElement("span");
      label.className = "term-label";
      label.textContent = row.term;
      label.addEventListener("click", () => {
        explorer.selectedTerm = explorer.selectedTerm === row.term ? null : row.term;
        explorer.selectedTopic = null;
        void refresh();
      });
      item.appendChild(label);

      const bars = document.createElement("span");
      bars.className = "term-bars";
      const blue = document.createElement("span");
      blue.className = "bar-overall";
      blue.style.width = `${(100 * row.overall) / maxOverall}%`;
      bars.appendChild(blue);
      if (row.in_topic !== null) {
        const red = document.createElement("span");
        red.className = "bar-in-topic";
        red.style.width = `${(100 * row.in_topic) / maxOverall}%`;
        bars.appendChild(red);
      }
      item.appendChild(bars);
      termList.appendChild(item);
    }
  }

  async function refresh(): Promise<void> {
    if (!explorer.modelId) return;
    const lambda = Number(lambdaSlider.value);
    const opts: { topic?: number; term?: string; lambda: number } = { lambda };
    if (explorer.selectedTopic !== null) opts.topic = explorer.selectedTopic;
    else if (explorer.selectedTerm !== null) opts.term = explorer.selectedTerm;
    try {
      const panel = await api.topicTerms(explorer.modelId, opts);
      drawTerms(panel);
      drawCircles(panel.topic_weights);
      status.textContent =
        explorer.selectedTopic !== null
          ? `topic ${explorer.selectedTopic + 1} selected`
          : explorer.selectedTerm !== null
            ? `term "${explorer.selectedTerm}" selected`
            : "all titles and abstracts";
    } catch (err) {
      status.textContent = String(err);
    }
  }

  async function poll(jobId: string): Promise<void> {
    status.textContent = "training…";
    for (;;) {
      const job = await api.getJob(jobId);
      if (job.state === "done") {
        await loadModel(jobId);
        return;
      }
      if (job.state === "failed") {
        status.textContent = `training failed: ${job.error ?? "unknown error"}`;
        return;
      }
      status.textContent = `training… (${job.state})`;
      await new Promise((resolve) => setTimeout(resolve, pollMs));
    }
  }

  trainButton.addEventListener("click", () => {
    const filters: Record<string, unknown> = {};
    const params = filterProvider();
    const listMap: Record<string, string> = {
      venue: "venues",
      author: "authors",
      publisher: "publishers",
      paper_type: "paper_types",
      field_of_study: "fields_of_study",
      access_type: "access_types",
    };
    for (const [wire, field] of Object.entries(listMap)) {
      const values = params.getAll(wire);
      if (values.length) filters[field] = values;
    }
    for (const key of ["year_min", "year_max", "cit_min", "cit_max"]) {
      const value = params.get(key);
      if (value !== null) filters[key] = Number(value);
    }
    trainButton.disabled = true;
    api
      .submitJob({ filters, k: 20, iterations: 150, seed: 0, lambda: Number(lambdaSlider.value) })
      .then((job) => poll(job.job_id))
      .catch((err) => {
        status.textContent = String(err);
      })
      .finally(() => {
        trainButton.disabled = false;
      });
  });

  lambdaSlider.addEventListener("change", () => {
    void refresh();
  });

  return explorer;
}
