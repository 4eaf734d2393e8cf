/**
 * KGAV1 binary matrix format, shared with the alignment engine:
 * magic "KGAV1", little-endian u32 rows, u32 cols, row-major float32 data.
 * Files are written atomically (tmp file + rename).
 */

import { readFileSync, renameSync, writeFileSync } from "node:fs";

const MAGIC = Buffer.from("KGAV1", "ascii");
const HEADER = MAGIC.length + 8;

export function writeMatrix(path: string, rows: Float32Array[], cols: number): void {
  const buf = Buffer.alloc(HEADER + rows.length * cols * 4);
  MAGIC.copy(buf, 0);
  buf.writeUInt32LE(rows.length, MAGIC.length);
  buf.writeUInt32LE(cols, MAGIC.length + 4);
  for (const [i, row] of rows.entries()) {
    if (row.length !== cols) {
      throw new Error(`row ${i} has ${row.length} values, expected ${cols}`);
    }
    for (const [j, value] of row.entries()) {
      buf.writeFloatLE(value, HEADER + (i * cols + j) * 4);
    }
  }
  const tmp = `${path}.tmp`;
  writeFileSync(tmp, buf);
  renameSync(tmp, path);
}

export function readMatrix(path: string): { rows: number; cols: number; data: Float32Array } {
  const buf = readFileSync(path);
  if (!buf.subarray(0, MAGIC.length).equals(MAGIC)) {
    throw new Error(`${path}: bad magic, not a KGAV1 file`);
  }
  const rows = buf.readUInt32LE(MAGIC.length);
  const cols = buf.readUInt32LE(MAGIC.length + 4);
  const expected = HEADER + rows * cols * 4;
  if (buf.length !== expected) {
    throw new Error(`${path}: expected ${expected} bytes for ${rows}x${cols}, got ${buf.length}`);
  }
  const data = new Float32Array(rows * cols);
  for (let k = 0; k < data.length; k++) {
    data[k] = buf.readFloatLE(HEADER + k * 4);
  }
  return { rows, cols, data };
}

/** One entity id per line, UTF-8, newline-terminated; order is row order. */
export function writeCatalog(path: string, ids: string[]): void {
  const tmp = `${path}.tmp`;
  writeFileSync(tmp, ids.map((id) => `${id}\n`).join(""));
  renameSync(tmp, path);
}
