/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const kyfan_report: (a: number, b: number, c: number) => [number, number];
export const paley_report: (a: number) => [number, number];
export const search_graphs: (a: number, b: number, c: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
