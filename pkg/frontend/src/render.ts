// DOM views. Each render function rebuilds one container from the state;
// event wiring stays in main.ts via the passed-in handlers.

import { runBlocks } from "./runs.js";
import {
    ExplorerState,
    parts,
    inadmissibleParts,
    canSubmit,
    gapToOptimum,
} from "./state.js";

function clear(container: HTMLElement): void {
    while (container.firstChild) container.removeChild(container.firstChild);
}

function el(tag: string, className: string, text?: string): HTMLElement {
    const node = document.createElement(tag);
    node.className = className;
    if (text !== undefined) node.textContent = text;
    return node;
}

/** The word as symbol tiles with a clickable gap between each adjacent pair. */
export function renderWordWithGaps(
    container: HTMLElement,
    state: ExplorerState,
    onToggle: (position: number) => void,
): void {
    clear(container);
    const bad = new Set(inadmissibleParts(state));
    state.word.split("").forEach((symbol, i) => {
        const partIndex = state.cuts.filter((cut) => cut <= i).length;
        const tile = el("span", bad.has(partIndex) ? "symbol inadmissible" : "symbol", symbol);
        container.appendChild(tile);
        const gapPosition = i + 1;
        if (gapPosition < state.word.length) {
            const active = state.cuts.includes(gapPosition);
            const gap = el("button", active ? "gap active" : "gap", active ? "|" : "·");
            gap.title = `cut after position ${gapPosition}`;
            gap.addEventListener("click", () => onToggle(gapPosition));
            container.appendChild(gap);
        }
    });
}

/** Current parts with the restriction verdict; mirrors the submit gate. */
export function renderParts(container: HTMLElement, state: ExplorerState): void {
    clear(container);
    const bad = new Set(inadmissibleParts(state));
    parts(state).forEach((part, index) => {
        container.appendChild(el("span", bad.has(index) ? "part inadmissible" : "part", part));
    });
    if (!canSubmit(state)) {
        container.appendChild(
            el("span", "notice", `parts of ${state.k} or fewer symbols are not allowed`),
        );
    }
}

/** Last transform: L as colored maximal blocks, run count, baseline, best. */
export function renderResult(container: HTMLElement, state: ExplorerState): void {
    clear(container);
    if (state.last === null) return;
    const lRow = el("div", "l-column");
    runBlocks(state.last.l).forEach((block, index) => {
        lRow.appendChild(el("span", `block c${index % 6}`, block));
    });
    container.appendChild(lRow);
    const summary = el("div", "summary");
    summary.appendChild(el("span", "stat", `runs ${state.last.runs}`));
    if (state.optimum !== null) {
        summary.appendChild(el("span", "stat", `baseline ${state.optimum.baseline}`));
    }
    if (state.best !== null) {
        summary.appendChild(el("span", "stat", `best so far ${state.best.runs}`));
    }
    container.appendChild(summary);
}

/** Rolling attempt history, oldest first, best and worst pinned above it. */
export function renderHistory(container: HTMLElement, state: ExplorerState): void {
    clear(container);
    if (state.best !== null && state.worst !== null) {
        container.appendChild(
            el("div", "pinned", `best ${state.best.runs} / worst ${state.worst.runs}`),
        );
    }
    state.history.forEach((attempt) => {
        const label = attempt.cuts.length > 0 ? attempt.cuts.join(",") : "no cuts";
        container.appendChild(el("div", "attempt", `${label} → ${attempt.runs}`));
    });
}

/** Server witness as a ghost composition the user adopts with one click. */
export function renderGhost(
    container: HTMLElement,
    state: ExplorerState,
    onAdopt: (composition: number[]) => void,
): void {
    clear(container);
    if (state.optimum === null) return;
    const { mode, runs: optRuns, composition } = state.optimum;
    container.appendChild(el("span", "ghost", `${mode} ${optRuns} via ${composition.join("+")}`));
    const gap = gapToOptimum(state);
    if (gap !== null) {
        container.appendChild(el("span", "stat", gap === 0 ? "optimal" : `gap ${gap}`));
    }
    const adopt = el("button", "adopt", "adopt") as HTMLButtonElement;
    adopt.addEventListener("click", () => onAdopt(composition));
    container.appendChild(adopt);
}

export function renderNotice(container: HTMLElement, text: string): void {
    clear(container);
    if (text) container.appendChild(el("span", "notice", text));
}
