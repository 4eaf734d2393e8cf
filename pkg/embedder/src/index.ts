export { loadDump, parseEntityIds, parseTriples, nameFromUri } from "./triples.js";
export type { KgDump } from "./triples.js";
export { buildViewTexts, VIEWS } from "./views.js";
export type { ViewName, ViewTexts } from "./views.js";
export { TranslationCache, translateTexts, cacheKey } from "./translate.js";
export type { TranslationEngine, TranslateOptions } from "./translate.js";
export { HashEncoder, encodeTexts } from "./encode.js";
export type { Encoder } from "./encode.js";
export { writeMatrix, readMatrix, writeCatalog } from "./kgav.js";
export { embedSide } from "./pipeline.js";
export type { EmbedSideOptions, EmbedSideResult } from "./pipeline.js";
