import { ApiClient, ServiceError, parseComposition } from "./api.js";
import {
    ExplorerState,
    WORD_CAP,
    createState,
    toggleCut,
    adoptComposition,
    partLengths,
    canSubmit,
    recordAttempt,
    withResult,
    withOptimum,
} from "./state.js";
import { runs } from "./runs.js";
import {
    renderWordWithGaps,
    renderParts,
    renderResult,
    renderHistory,
    renderGhost,
    renderNotice,
} from "./render.js";

function byId<T extends HTMLElement>(id: string): T {
    const node = document.getElementById(id);
    if (node === null) throw new Error(`missing element #${id}`);
    return node as T;
}

const wordInput = byId<HTMLInputElement>("word");
const kInput = byId<HTMLInputElement>("k");
const serviceInput = byId<HTMLInputElement>("service");
const loadButton = byId<HTMLButtonElement>("load");
const submitButton = byId<HTMLButtonElement>("submit");
const minButton = byId<HTMLButtonElement>("find-min");
const maxButton = byId<HTMLButtonElement>("find-max");
const wordView = byId<HTMLElement>("word-view");
const partsView = byId<HTMLElement>("parts-view");
const resultView = byId<HTMLElement>("result-view");
const ghostView = byId<HTMLElement>("ghost-view");
const historyView = byId<HTMLElement>("history-view");
const noticeView = byId<HTMLElement>("notice-view");

wordInput.maxLength = WORD_CAP;

let state: ExplorerState | null = null;
let client = new ApiClient(serviceInput.value);

function redraw(): void {
    if (state === null) return;
    const current = state;
    renderWordWithGaps(wordView, current, (position) => {
        state = toggleCut(current, position);
        redraw();
    });
    renderParts(partsView, current);
    renderResult(resultView, current);
    renderGhost(ghostView, current, (composition) => {
        state = adoptComposition(current, composition);
        redraw();
        void submit();
    });
    renderHistory(historyView, current);
    submitButton.disabled = !canSubmit(current);
}

function showError(error: unknown): void {
    if (error instanceof ServiceError && error.code === "guard_exceeded") {
        renderNotice(noticeView, `refused by a size guard: ${error.message}`);
    } else if (error instanceof ServiceError) {
        renderNotice(noticeView, error.message);
    } else if (error instanceof DOMException && error.name === "AbortError") {
        // superseded by a newer request, nothing to show
    } else {
        renderNotice(noticeView, `service unreachable: ${String(error)}`);
    }
}

async function submit(): Promise<void> {
    if (state === null || !canSubmit(state)) return;
    renderNotice(noticeView, "");
    try {
        const response = await client.apply(state.word, partLengths(state), state.k);
        if (runs(response.l) !== response.runs) {
            renderNotice(noticeView, "run count mismatch between client and service");
        }
        state = withResult(state, {
            l: response.l,
            runs: response.runs,
            admissible: response.admissible,
        });
        state = recordAttempt(state, response.runs);
        redraw();
    } catch (error) {
        showError(error);
    }
}

async function findExtreme(mode: "min" | "max"): Promise<void> {
    if (state === null) return;
    renderNotice(noticeView, "searching...");
    try {
        const response = await client.search(state.word, state.k);
        const witness = mode === "min" ? response.min_witness : response.max_witness;
        const optRuns = mode === "min" ? response.min_rho : response.max_rho;
        state = withOptimum(state, {
            mode,
            runs: optRuns,
            composition: parseComposition(witness),
            baseline: response.baseline_rho,
        });
        renderNotice(noticeView, "");
        redraw();
    } catch (error) {
        showError(error);
    }
}

function load(): void {
    renderNotice(noticeView, "");
    client = new ApiClient(serviceInput.value.replace(/\/+$/, ""));
    try {
        state = createState(wordInput.value, Number.parseInt(kInput.value, 10));
    } catch (error) {
        state = null;
        renderNotice(noticeView, String(error instanceof Error ? error.message : error));
        return;
    }
    redraw();
}

loadButton.addEventListener("click", load);
submitButton.addEventListener("click", () => void submit());
minButton.addEventListener("click", () => void findExtreme("min"));
maxButton.addEventListener("click", () => void findExtreme("max"));
wordInput.addEventListener("keydown", (event) => {
    if (event.key === "Enter") load();
});

load();
