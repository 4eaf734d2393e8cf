/**
 * Parsers for DBP15K-style knowledge-graph dump files (all tab-separated,
 * UTF-8):
 *
 *   ent_ids      entityId <TAB> uriOrName
 *   rel_triples  headId   <TAB> relation <TAB> tailId
 *   attr_triples entityId <TAB> property <TAB> value
 */

import { readFileSync } from "node:fs";

export interface KgDump {
  /** Entity ids in file order; this order is the catalog order. */
  entityIds: string[];
  /** Entity id -> human-readable name. */
  names: Map<string, string>;
  /** Relation triples as [head, relation, tail] entity/relation ids. */
  relTriples: Array<[string, string, string]>;
  /** Attribute triples as [entity, property, value]. */
  attrTriples: Array<[string, string, string]>;
}

/** Last URI segment with underscores as spaces; plain names pass through. */
export function nameFromUri(uri: string): string {
  const tail = uri.split("/").pop() ?? uri;
  return decodeURIComponent(tail).replace(/_/g, " ");
}

function parseLines(text: string, columns: number, file: string): string[][] {
  const rows: string[][] = [];
  for (const [index, raw] of text.split("\n").entries()) {
    const line = raw.replace(/\r$/, "");
    if (line === "") continue;
    const parts = line.split("\t");
    if (parts.length !== columns) {
      throw new Error(
        `${file}:${index + 1}: expected ${columns} tab-separated fields, got ${parts.length}`,
      );
    }
    rows.push(parts);
  }
  return rows;
}

export function parseEntityIds(path: string): {
  entityIds: string[];
  names: Map<string, string>;
} {
  const rows = parseLines(readFileSync(path, "utf-8"), 2, path);
  const entityIds: string[] = [];
  const names = new Map<string, string>();
  for (const [id, uri] of rows as Array<[string, string]>) {
    if (names.has(id)) {
      throw new Error(`${path}: duplicate entity id ${JSON.stringify(id)}`);
    }
    entityIds.push(id);
    names.set(id, nameFromUri(uri));
  }
  return { entityIds, names };
}

export function parseTriples(path: string): Array<[string, string, string]> {
  return parseLines(readFileSync(path, "utf-8"), 3, path) as Array<
    [string, string, string]
  >;
}

export function loadDump(dir: string): KgDump {
  const { entityIds, names } = parseEntityIds(`${dir}/ent_ids`);
  return {
    entityIds,
    names,
    relTriples: parseTriples(`${dir}/rel_triples`),
    attrTriples: parseTriples(`${dir}/attr_triples`),
  };
}
