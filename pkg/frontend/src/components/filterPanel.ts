// Board B: the eight filters. Six textual facets with debounced
// auto-complete dropdowns and value chips, two numeric min/max pairs,
// Apply and Clear buttons, and a help tooltip per filter.
//
// Editing only mutates the draft; nothing is fetched (beyond suggestion
// lookups) until Apply.

import type { ApiClient } from "../api";
import { cloneFilter, emptyFilter, validateRanges, type FilterState, LIST_FIELDS } from "../state";

export const DEBOUNCE_MS = 250;

const FACET_LABELS: Record<(typeof LIST_FIELDS)[number], string> = {
  venues: "Venues",
  authors: "Authors",
  publishers: "Publishers",
  paper_types: "Types of papers",
  fields_of_study: "Field of study",
  access_types: "Access type",
};

const FACET_HELP: Record<(typeof LIST_FIELDS)[number], string> = {
  venues: "Match venue names exactly; prefix with re: for a regular expression. Values OR together.",
  authors: "Match author names exactly; prefix with re: for a regular expression. Values OR together.",
  publishers: "Match publisher names exactly; prefix with re: for a regular expression. Values OR together.",
  paper_types: "Pick from the pre-set publication classes. Values OR together.",
  fields_of_study: "Match field labels exactly. Values OR together.",
  access_types: "Pick from open, closed or unknown. Values OR together.",
};

export interface FilterPanel {
  el: HTMLElement;
  applyButton: HTMLButtonElement;
  clearButton: HTMLButtonElement;
  message: HTMLElement;
  draft: FilterState;
  setDraft(filter: FilterState): void;
  onApply(cb: (filter: FilterState) => void): void;
  onClear(cb: () => void): void;
  showError(text: string): void;
}

export function createFilterPanel(api: ApiClient): FilterPanel {
  const el = document.createElement("aside");
  el.className = "filter-panel";

  const heading = document.createElement("h2");
  heading.textContent = "Filters";
  el.appendChild(heading);

  let draft = emptyFilter();
  let applyCallback: ((f: FilterState) => void) | null = null;
  let clearCallback: (() => void) | null = null;
  const chipLists = new Map<string, HTMLElement>();

  function renderChips(field: (typeof LIST_FIELDS)[number]): void {
    const list = chipLists.get(field)!;
    list.textContent = "";
    draft[field].forEach((value, index) => {
      const chip = document.createElement("span");
      chip.className = "chip";
      chip.textContent = value;
      const remove = document.createElement("button");
      remove.className = "chip-remove";
      remove.textContent = "×";
      remove.setAttribute("aria-label", `remove ${value}`);
      remove.addEventListener("click", () => {
        draft[field].splice(index, 1);
        renderChips(field);
        refreshValidity();
      });
      chip.appendChild(remove);
      list.appendChild(chip);
    });
  }

  for (const field of LIST_FIELDS) {
    const group = document.createElement("div");
    group.className = "filter-group";
    group.dataset.facet = field;

    const label = document.createElement("label");
    label.textContent = FACET_LABELS[field];
    const help = document.createElement("span");
    help.className = "help";
    help.textContent = "?";
    help.title = FACET_HELP[field];
    label.appendChild(help);
    group.appendChild(label);

    const input = document.createElement("input");
    input.type = "text";
    input.setAttribute("data-facet-input", field);
    input.placeholder = "type to search…";
    group.appendChild(input);

    const dropdown = document.createElement("ul");
    dropdown.className = "suggestions";
    dropdown.hidden = true;
    group.appendChild(dropdown);

    const chips = document.createElement("div");
    chips.className = "chips";
    group.appendChild(chips);
    chipLists.set(field, chips);

    let timer: ReturnType<typeof setTimeout> | null = null;
    let lookupSeq = 0;

    function addValue(value: string): void {
      if (value && !draft[field].includes(value)) {
        draft[field].push(value);
        renderChips(field);
        refreshValidity();
      }
      input.value = "";
      dropdown.hidden = true;
    }

    function showSuggestions(): void {
      const ticket = ++lookupSeq;
      api
        .autocomplete(field, input.value)
        .then((suggestions) => {
          if (ticket !== lookupSeq) return;
          dropdown.textContent = "";
          for (const suggestion of suggestions) {
            const item = document.createElement("li");
            item.dataset.value = suggestion.value;
            item.textContent = `${suggestion.value} (${suggestion.count})`;
            item.addEventListener("mousedown", (event) => {
              event.preventDefault();
              addValue(suggestion.value);
            });
            dropdown.appendChild(item);
          }
          dropdown.hidden = dropdown.childElementCount === 0;
        })
        .catch(() => {
          dropdown.hidden = true;
        });
    }

    input.addEventListener("input", () => {
      if (timer !== null) clearTimeout(timer);
      timer = setTimeout(showSuggestions, DEBOUNCE_MS);
    });
    input.addEventListener("focus", () => {
      if (timer !== null) clearTimeout(timer);
      timer = setTimeout(showSuggestions, DEBOUNCE_MS);
    });
    input.addEventListener("keydown", (event) => {
      if (event.key === "Enter") addValue(input.value.trim());
    });
    input.addEventListener("blur", () => {
      setTimeout(() => {
        dropdown.hidden = true;
      }, 100);
    });

    el.appendChild(group);
  }

  const rangeInputs = new Map<string, HTMLInputElement>();
  for (const [title, loField, hiField, helpText] of [
    ["Year of publication", "year_min", "year_max", "Inclusive publication-year range."],
    ["Citations", "cit_min", "cit_max", "Inclusive range over incoming citations."],
  ] as const) {
    const group = document.createElement("div");
    group.className = "filter-group range-group";

    const label = document.createElement("label");
    label.textContent = title;
    const help = document.createElement("span");
    help.className = "help";
    help.textContent = "?";
    help.title = helpText;
    label.appendChild(help);
    group.appendChild(label);

    for (const [field, placeholder] of [
      [loField, "min"],
      [hiField, "max"],
    ] as const) {
      const input = document.createElement("input");
      input.type = "text";
      input.size = 6;
      input.placeholder = placeholder;
      input.setAttribute("data-range-input", field);
      input.addEventListener("input", () => {
        draft[field] = input.value;
        refreshValidity();
      });
      rangeInputs.set(field, input);
      group.appendChild(input);
    }
    el.appendChild(group);
  }

  const message = document.createElement("p");
  message.className = "filter-message";
  message.hidden = true;
  el.appendChild(message);

  const actions = document.createElement("div");
  actions.className = "filter-actions";
  const applyButton = document.createElement("button");
  applyButton.className = "apply";
  applyButton.textContent = "Fetch Data / Apply Filters";
  const clearButton = document.createElement("button");
  clearButton.className = "clear";
  clearButton.textContent = "Clear filters";
  actions.append(applyButton, clearButton);
  el.appendChild(actions);

  function refreshValidity(): void {
    const problem = validateRanges(draft);
    applyButton.disabled = problem !== null;
    message.hidden = problem === null;
    message.textContent = problem ? problem.message : "";
  }

  applyButton.addEventListener("click", () => {
    if (!applyButton.disabled && applyCallback) applyCallback(cloneFilter(draft));
  });
  clearButton.addEventListener("click", () => {
    setDraft(emptyFilter());
    if (clearCallback) clearCallback();
  });

  function setDraft(filter: FilterState): void {
    draft = cloneFilter(filter);
    panel.draft = draft;
    for (const field of LIST_FIELDS) renderChips(field);
    for (const [field, input] of rangeInputs) {
      input.value = draft[field as keyof FilterState] as string;
    }
    refreshValidity();
  }

  const panel: FilterPanel = {
    el,
    applyButton,
    clearButton,
    message,
    draft,
    setDraft,
    onApply(cb) {
      applyCallback = cb;
    },
    onClear(cb) {
      clearCallback = cb;
    },
    showError(text: string) {
      message.hidden = false;
      message.textContent = text;
    },
  };
  return panel;
}
