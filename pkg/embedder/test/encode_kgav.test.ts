import { mkdtempSync, readFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { encodeTexts, HashEncoder } from "../src/encode.js";
import { readMatrix, writeCatalog, writeMatrix } from "../src/kgav.js";

describe("HashEncoder", () => {
  it("gives identical rows for identical texts", async () => {
    const enc = new HashEncoder(64);
    const [a, b] = await encodeTexts(enc, ["Tokyo Tower", "Tokyo Tower"]);
    expect(a).toEqual(b);
  });

  it("gives different rows for different texts", async () => {
    const enc = new HashEncoder(64);
    const [a, b] = await encodeTexts(enc, ["Tokyo", "Kyoto"]);
    expect(a).not.toEqual(b);
  });

  it("gives a zero row for an empty text", async () => {
    const enc = new HashEncoder(32);
    const [row] = await encodeTexts(enc, [""]);
    expect([...row!]).toEqual(new Array(32).fill(0));
  });

  it("produces unit-norm rows for non-empty texts", async () => {
    const enc = new HashEncoder(128);
    const [row] = await encodeTexts(enc, ["some entity name"]);
    const norm = Math.sqrt([...row!].reduce((s, v) => s + v * v, 0));
    expect(norm).toBeCloseTo(1.0, 6);
  });
});

describe("KGAV1 files", () => {
  it("round-trips a matrix", () => {
    const dir = mkdtempSync(join(tmpdir(), "kgav-"));
    const path = join(dir, "m.kgav");
    const rows = [new Float32Array([1, 2, 3]), new Float32Array([4, 5, 6.5])];
    writeMatrix(path, rows, 3);
    const back = readMatrix(path);
    expect(back.rows).toBe(2);
    expect(back.cols).toBe(3);
    expect([...back.data]).toEqual([1, 2, 3, 4, 5, 6.5]);
  });

  it("writes the documented header bytes", () => {
    const dir = mkdtempSync(join(tmpdir(), "kgav-"));
    const path = join(dir, "m.kgav");
    writeMatrix(path, [new Float32Array([0])], 1);
    const buf = readFileSync(path);
    expect(buf.subarray(0, 5).toString("ascii")).toBe("KGAV1");
    expect(buf.readUInt32LE(5)).toBe(1);
    expect(buf.readUInt32LE(9)).toBe(1);
    expect(buf.length).toBe(5 + 8 + 4);
  });

  it("rejects rows with the wrong width", () => {
    const dir = mkdtempSync(join(tmpdir(), "kgav-"));
    expect(() => writeMatrix(join(dir, "m.kgav"), [new Float32Array([1, 2])], 3)).toThrow(
      "expected 3",
    );
  });

  it("writes catalogs with one id per line", () => {
    const dir = mkdtempSync(join(tmpdir(), "kgav-"));
    const path = join(dir, "g1.catalog");
    writeCatalog(path, ["a", "b", "c"]);
    expect(readFileSync(path, "utf-8")).toBe("a\nb\nc\n");
  });
});
