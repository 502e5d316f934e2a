// Thin client for the ebwtlab JSON service. The service is the single
// source of transform truth; this module never computes an eBWT itself.

export type ApplyResponse = {
    l: string;
    runs: number;
    parts: string[];
    parts_admissible: boolean[];
    admissible: boolean;
};

export type SearchResponse = {
    word: string;
    k: number;
    count_explored: string;
    baseline_rho: number;
    min_rho: number;
    min_witness: string;
    max_rho: number;
    max_witness: string;
};

/** A structured refusal from the service ("malformed_input", "guard_exceeded", ...). */
export class ServiceError extends Error {
    constructor(
        readonly code: string,
        message: string,
        readonly status: number,
    ) {
        super(message);
        this.name = "ServiceError";
    }
}

export function parseComposition(witness: string): number[] {
    return witness.split("+").map((piece) => Number.parseInt(piece, 10));
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
    private searchController: AbortController | null = null;

    constructor(
        readonly baseUrl: string,
        private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
    ) {}

    private async post(route: string, body: unknown, signal?: AbortSignal): Promise<unknown> {
        const response = await this.fetchFn(`${this.baseUrl}${route}`, {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify(body),
            signal,
        });
        const payload = (await response.json()) as Record<string, unknown>;
        if (!response.ok) {
            throw new ServiceError(
                String(payload.code ?? "error"),
                String(payload.message ?? response.statusText),
                response.status,
            );
        }
        return payload;
    }

    async apply(word: string, partsLengths: number[], k: number): Promise<ApplyResponse> {
        const body = { word, parts_lengths: partsLengths, k };
        return (await this.post("/api/apply", body)) as ApplyResponse;
    }

    /** Exhaustive extremes; a new call cancels the one still in flight. */
    async search(word: string, k: number): Promise<SearchResponse> {
        this.searchController?.abort();
        const controller = new AbortController();
        this.searchController = controller;
        try {
            return (await this.post("/api/search", { word, k }, controller.signal)) as SearchResponse;
        } finally {
            if (this.searchController === controller) this.searchController = null;
        }
    }

    async health(): Promise<boolean> {
        try {
            const response = await this.fetchFn(`${this.baseUrl}/api/health`);
            return response.ok;
        } catch {
            return false;
        }
    }
}
