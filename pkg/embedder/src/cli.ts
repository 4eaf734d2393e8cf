#!/usr/bin/env node
/**
 * kg-embedder CLI: produce per-view embedding files for one graph side.
 *
 *   kg-embedder embed --dump DIR --out DIR --side 1 --cache DIR \
 *       [--engine NAME] [--no-translate] [--dim 256]
 *
 * Without --no-translate the run is offline-first: every text must hit the
 * translation cache, and misses fail hard naming the missing keys.
 */

import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { HashEncoder } from "./encode.js";
import { embedSide } from "./pipeline.js";
import { TranslationCache } from "./translate.js";

export async function run(argv: string[]): Promise<void> {
  await yargs(argv)
    .parserConfiguration({ "boolean-negation": false })
    .command(
      "embed",
      "Build view texts, translate via cache, encode, write KGAV files",
      (y) =>
        y
          .option("dump", { type: "string", demandOption: true, describe: "dump directory (ent_ids, rel_triples, attr_triples)" })
          .option("out", { type: "string", demandOption: true })
          .option("side", { type: "number", choices: [1, 2], demandOption: true })
          .option("cache", { type: "string", demandOption: true, describe: "translation cache directory" })
          .option("engine", { type: "string", default: "google", describe: "engine name for cache lookups" })
          .option("no-translate", { type: "boolean", default: false, describe: "pass texts through untranslated" })
          .option("dim", { type: "number", default: 256 }),
      async (args) => {
        const result = await embedSide({
          dumpDir: args.dump,
          outDir: args.out,
          side: args.side as 1 | 2,
          encoder: new HashEncoder(args.dim),
          cache: new TranslationCache(args.cache),
          translation: args["no-translate"]
            ? { noTranslate: true }
            : { engineName: args.engine },
        });
        console.log(`entities\t${result.entityCount}`);
        console.log(`views\t${result.views.join(",")}`);
        console.log(`catalog\t${result.catalogPath}`);
      },
    )
    .demandCommand(1)
    .strict()
    .fail((msg, err) => {
      console.error(err?.message ?? msg);
      process.exit(1);
    })
    .parseAsync();
}

const invokedDirectly =
  process.argv[1] !== undefined && import.meta.url.endsWith(process.argv[1].split("/").pop()!);
if (invokedDirectly) {
  run(hideBin(process.argv));
}
