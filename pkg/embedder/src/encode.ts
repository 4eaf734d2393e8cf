/**
 * Sentence encoding behind a pluggable interface. A real deployment plugs a
 * multilingual sentence-transformer (768-d) in here; the built-in
 * HashEncoder is a deterministic, dependency-free stand-in that hashes
 * character n-grams into a fixed-dimensional unit vector, good enough for
 * offline tests and synthetic runs.
 *
 * Regardless of encoder, an empty text always becomes a zero row.
 */

import { createHash } from "node:crypto";

export interface Encoder {
  /** Stable model identifier, recorded alongside outputs. */
  readonly id: string;
  readonly dim: number;
  encode(texts: string[]): Promise<Float32Array[]>;
}

export class HashEncoder implements Encoder {
  readonly id: string;

  constructor(
    readonly dim: number = 256,
    private readonly ngram: number = 3,
  ) {
    if (dim < 1) throw new Error("dim must be >= 1");
    this.id = `hash-ngram${ngram}-d${dim}`;
  }

  private embedOne(text: string): Float32Array {
    const vec = new Float32Array(this.dim);
    if (text === "") return vec;
    const padded = `${text}`;
    for (let i = 0; i + this.ngram <= padded.length; i++) {
      const gram = padded.slice(i, i + this.ngram);
      const digest = createHash("sha256").update(gram).digest();
      const bucket = digest.readUInt32LE(0) % this.dim;
      const sign = digest[4]! & 1 ? 1 : -1;
      vec[bucket]! += sign;
    }
    let norm = 0;
    for (const v of vec) norm += v * v;
    norm = Math.sqrt(norm);
    if (norm > 0) for (let k = 0; k < this.dim; k++) vec[k]! /= norm;
    return vec;
  }

  async encode(texts: string[]): Promise<Float32Array[]> {
    return texts.map((t) => this.embedOne(t));
  }
}

/** Encode texts with empty-text rows forced to zero vectors. */
export async function encodeTexts(
  encoder: Encoder,
  texts: string[],
): Promise<Float32Array[]> {
  const rows = await encoder.encode(texts);
  if (rows.length !== texts.length) {
    throw new Error(
      `encoder ${encoder.id} returned ${rows.length} rows for ${texts.length} texts`,
    );
  }
  return rows.map((row, i) => (texts[i] === "" ? new Float32Array(encoder.dim) : row));
}
