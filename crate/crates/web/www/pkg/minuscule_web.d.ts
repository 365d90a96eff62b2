/* tslint:disable */
/* eslint-disable */

/**
 * The `W`-orbit of `vector` split into orbits of the stabilizer of `coweight`.
 */
export function orbit_blocks(label: string, vector: string, coweight: string): string;

/**
 * A random conjugate pair of triangles and a word relating them.
 */
export function random_triangle_witness(label: string, coweight: string, seed: number): string;

/**
 * Roots, simple roots, highest root and minuscule coweights.
 */
export function root_system_info(label: string): string;

/**
 * A word `w` with `w (a2, b2, -a2-b2) = (a, b, -a-b)`.
 */
export function triangle_witness_for(label: string, a: string, b: string, a2: string, b2: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly orbit_blocks: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly random_triangle_witness: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly root_system_info: (a: number, b: number) => [number, number, number, number];
    readonly triangle_witness_for: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number, j: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
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
