// @vitest-environment happy-dom
import { describe, expect, it } from "vitest";
import { createState, toggleCut, withResult, withOptimum, recordAttempt } from "../src/state.js";
import {
    renderWordWithGaps,
    renderParts,
    renderResult,
    renderGhost,
} from "../src/render.js";

function box(): HTMLElement {
    const node = document.createElement("div");
    document.body.appendChild(node);
    return node;
}

describe("renderWordWithGaps", () => {
    it("marks active cuts and leaves admissible parts unflagged", () => {
        const state = toggleCut(createState("baabab", 2), 3);
        const view = box();
        renderWordWithGaps(view, state, () => {});
        expect(view.querySelectorAll(".symbol").length).toBe(6);
        expect(view.querySelectorAll(".gap").length).toBe(5);
        expect(view.querySelectorAll(".gap.active").length).toBe(1);
        expect(view.querySelectorAll(".symbol.inadmissible").length).toBe(0);
    });

    it("highlights every symbol of a part at or below k", () => {
        const state = toggleCut(createState("ab", 1), 1);
        const view = box();
        renderWordWithGaps(view, state, () => {});
        expect(view.querySelectorAll(".symbol.inadmissible").length).toBe(2);
    });

    it("reports gap clicks at the right position", () => {
        const clicked: number[] = [];
        const view = box();
        renderWordWithGaps(view, createState("baabab", 2), (pos) => clicked.push(pos));
        const gaps = view.querySelectorAll<HTMLButtonElement>(".gap");
        gaps[2]?.click();
        expect(clicked).toEqual([3]);
    });
});

describe("renderParts", () => {
    it("flags inadmissible parts and explains the restriction", () => {
        const state = toggleCut(createState("baabab", 2), 4);
        const view = box();
        renderParts(view, state);
        expect(view.querySelectorAll(".part").length).toBe(2);
        expect(view.querySelectorAll(".part.inadmissible").length).toBe(1);
        expect(view.querySelector(".notice")?.textContent).toContain("2 or fewer");
    });
});

describe("renderResult", () => {
    it("shows the transform as maximal blocks with the run count", () => {
        let state = toggleCut(createState("baabab", 2), 3);
        state = withResult(state, { l: "bababa", runs: 5, admissible: true });
        state = recordAttempt(state, 5);
        const view = box();
        renderResult(view, state);
        const blocks = [...view.querySelectorAll(".block")].map((b) => b.textContent);
        expect(blocks).toEqual(["b", "a", "b", "a", "b", "a"]);
        expect(view.textContent).toContain("runs 5");
        expect(view.textContent).toContain("best so far 5");
    });
});

describe("renderGhost", () => {
    it("offers the witness for adoption and shows the gap", () => {
        let state = createState("baabab", 2);
        state = recordAttempt(state, 5);
        state = withOptimum(state, { mode: "min", runs: 3, composition: [6], baseline: 3 });
        const adopted: number[][] = [];
        const view = box();
        renderGhost(view, state, (composition) => adopted.push(composition));
        expect(view.textContent).toContain("min 3 via 6");
        expect(view.textContent).toContain("gap 2");
        view.querySelector<HTMLButtonElement>(".adopt")?.click();
        expect(adopted).toEqual([[6]]);
    });
});
