// Explorer state and its pure update functions. The word is immutable for
// the life of a state; cuts, history, and server responses evolve through
// the functions below, each returning a fresh state.

export const WORD_CAP = 64;
export const HISTORY_CAP = 200;

export type Attempt = {
    cuts: number[];
    runs: number;
};

export type ServerResult = {
    l: string;
    runs: number;
    admissible: boolean;
};

export type Optimum = {
    mode: "min" | "max";
    runs: number;
    composition: number[];
    baseline: number;
};

export type ExplorerState = {
    word: string;
    k: number;
    cuts: number[];
    last: ServerResult | null;
    history: Attempt[];
    best: Attempt | null;
    worst: Attempt | null;
    optimum: Optimum | null;
};

export function createState(word: string, k: number): ExplorerState {
    if (word.length === 0) throw new Error("word must be non-empty");
    if (word.length > WORD_CAP) {
        throw new Error(`word has ${word.length} symbols, more than the cap of ${WORD_CAP}`);
    }
    if (!Number.isInteger(k) || k < 0) throw new Error("k must be a non-negative integer");
    return { word, k, cuts: [], last: null, history: [], best: null, worst: null, optimum: null };
}

/** Split the word at the given positions; cuts always reassemble to the word. */
export function partsFromCuts(word: string, cuts: number[]): string[] {
    const bounds = [0, ...cuts, word.length];
    const parts: string[] = [];
    for (let i = 1; i < bounds.length; i++) {
        parts.push(word.slice(bounds[i - 1], bounds[i]));
    }
    return parts;
}

export function parts(state: ExplorerState): string[] {
    return partsFromCuts(state.word, state.cuts);
}

export function partLengths(state: ExplorerState): number[] {
    return parts(state).map((p) => p.length);
}

/** Indices of parts violating the restriction: every part must exceed k symbols. */
export function inadmissibleParts(state: ExplorerState): number[] {
    const out: number[] = [];
    parts(state).forEach((part, index) => {
        if (part.length <= state.k) out.push(index);
    });
    return out;
}

export function canSubmit(state: ExplorerState): boolean {
    return inadmissibleParts(state).length === 0;
}

/** Add or remove a cut; positions are strictly inside the word. */
export function toggleCut(state: ExplorerState, position: number): ExplorerState {
    if (!Number.isInteger(position) || position <= 0 || position >= state.word.length) {
        throw new Error(`cut position ${position} is outside (0, ${state.word.length})`);
    }
    const cuts = state.cuts.includes(position)
        ? state.cuts.filter((c) => c !== position)
        : [...state.cuts, position].sort((a, b) => a - b);
    return { ...state, cuts };
}

export function clearCuts(state: ExplorerState): ExplorerState {
    return { ...state, cuts: [] };
}

/** Set the cuts to realize a composition (part lengths summing to the word). */
export function adoptComposition(state: ExplorerState, composition: number[]): ExplorerState {
    if (composition.some((len) => !Number.isInteger(len) || len <= 0)) {
        throw new Error("composition parts must be positive integers");
    }
    const total = composition.reduce((a, b) => a + b, 0);
    if (total !== state.word.length) {
        throw new Error(`composition sums to ${total}, expected ${state.word.length}`);
    }
    const cuts: number[] = [];
    let at = 0;
    for (const len of composition.slice(0, -1)) {
        at += len;
        cuts.push(at);
    }
    return { ...state, cuts };
}

export function withResult(state: ExplorerState, result: ServerResult): ExplorerState {
    return { ...state, last: result };
}

export function withOptimum(state: ExplorerState, optimum: Optimum): ExplorerState {
    return { ...state, optimum };
}

/**
 * Append the current cuts with their run count to the history.
 *
 * The history is a rolling window of the last HISTORY_CAP attempts; the
 * best and worst attempts are tracked separately so they survive eviction.
 */
export function recordAttempt(state: ExplorerState, runCount: number): ExplorerState {
    const attempt: Attempt = { cuts: [...state.cuts], runs: runCount };
    const history = [...state.history, attempt];
    if (history.length > HISTORY_CAP) history.shift();
    const best = state.best === null || runCount < state.best.runs ? attempt : state.best;
    const worst = state.worst === null || runCount > state.worst.runs ? attempt : state.worst;
    return { ...state, history, best, worst };
}

/** How far the user's best attempt sits above the server-reported minimum. */
export function gapToOptimum(state: ExplorerState): number | null {
    if (state.best === null || state.optimum === null || state.optimum.mode !== "min") {
        return null;
    }
    return state.best.runs - state.optimum.runs;
}
