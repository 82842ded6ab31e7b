/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_response_free: (a: number, b: number) => void;
export const classify: (a: number, b: number, c: number) => number;
export const preset: (a: number, b: number) => [number, number];
export const rb_to_ybe: (a: number, b: number, c: number, d: number, e: number) => number;
export const response_code: (a: number) => number;
export const response_output: (a: number) => [number, number];
export const search_aybe: (a: number, b: number, c: number, d: number, e: number, f: number) => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
