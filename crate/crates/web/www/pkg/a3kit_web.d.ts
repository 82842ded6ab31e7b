/* tslint:disable */
/* eslint-disable */

export class Response {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * 0 passed, 1 failed, 2 bad input.
     */
    readonly code: number;
    readonly output: string;
}

export function classify(text: string, json: boolean): Response;

export function preset(name: string): string | undefined;

export function rb_to_ybe(text: string, map: string, json: boolean): Response;

export function search_aybe(text: string, grid: string, max_solutions: number, json: boolean): Response;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_response_free: (a: number, b: number) => void;
    readonly classify: (a: number, b: number, c: number) => number;
    readonly preset: (a: number, b: number) => [number, number];
    readonly rb_to_ybe: (a: number, b: number, c: number, d: number, e: number) => number;
    readonly response_code: (a: number) => number;
    readonly response_output: (a: number) => [number, number];
    readonly search_aybe: (a: number, b: number, c: number, d: number, e: number, f: number) => number;
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
