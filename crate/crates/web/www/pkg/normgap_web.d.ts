/* tslint:disable */
/* eslint-disable */

/**
 * Ky Fan extremal (0,1) matrix for `(k, p, q)` with its singular values and verdict.
 */
export function kyfan_report(k: number, p: number, q: number): string;

/**
 * Spectrum, graph-energy bound verdict and equality flags for the Paley graph of order `q`.
 */
export function paley_report(q: number): string;

/**
 * Seeded annealing for the largest `‖G‖₊ + ‖Ḡ‖₊` on `n` vertices.
 */
export function search_graphs(n: number, restarts: number, seed: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly kyfan_report: (a: number, b: number, c: number) => [number, number];
    readonly paley_report: (a: number) => [number, number];
    readonly search_graphs: (a: number, b: number, c: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
