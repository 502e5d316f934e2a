/** Adjacent unequal pairs; one less than the number of equal-symbol blocks. */
export function runs(text: string): number {
    let count = 0;
    for (let i = 1; i < text.length; i++) {
        if (text[i] !== text[i - 1]) count++;
    }
    return count;
}

/** Maximal equal-symbol blocks in order: "bbaa" gives ["bb", "aa"]. */
export function runBlocks(text: string): string[] {
    const blocks: string[] = [];
    let start = 0;
    for (let i = 1; i <= text.length; i++) {
        if (i === text.length || text[i] !== text[i - 1]) {
            blocks.push(text.slice(start, i));
            start = i;
        }
    }
    return blocks;
}
