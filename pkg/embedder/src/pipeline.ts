/**
 * End-to-end embedder run for one graph side: load dump, build view texts,
 * translate (cached), encode, and write the catalog plus one KGAV1
 * embedding file per view — the exact on-disk layout the alignment engine
 * consumes (gN.catalog, gN.E.kgav, ...).
 */

import { mkdirSync } from "node:fs";
import { join } from "node:path";

import type { Encoder } from "./encode.js";
import { encodeTexts } from "./encode.js";
import { writeCatalog, writeMatrix } from "./kgav.js";
import { loadDump } from "./triples.js";
import type { TranslateOptions, TranslationCache } from "./translate.js";
import { translateTexts } from "./translate.js";
import { buildViewTexts, VIEWS } from "./views.js";

export interface EmbedSideOptions {
  dumpDir: string;
  outDir: string;
  /** 1 or 2; selects the gN file prefix. */
  side: 1 | 2;
  encoder: Encoder;
  cache: TranslationCache;
  translation: TranslateOptions;
}

export interface EmbedSideResult {
  entityCount: number;
  views: string[];
  catalogPath: string;
}

export async function embedSide(options: EmbedSideOptions): Promise<EmbedSideResult> {
  const dump = loadDump(options.dumpDir);
  const texts = buildViewTexts(dump);
  mkdirSync(options.outDir, { recursive: true });

  const prefix = `g${options.side}`;
  const catalogPath = join(options.outDir, `${prefix}.catalog`);
  writeCatalog(catalogPath, dump.entityIds);

  for (const view of VIEWS) {
    const translated = await translateTexts(texts[view], options.cache, options.translation);
    const rows = await encodeTexts(options.encoder, translated);
    writeMatrix(join(options.outDir, `${prefix}.${view}.kgav`), rows, options.encoder.dim);
  }
  return {
    entityCount: dump.entityIds.length,
    views: [...VIEWS],
    catalogPath,
  };
}
