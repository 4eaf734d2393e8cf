/**
 * View-text construction: one text per entity per view.
 *
 *   E  — the entity's own name
 *   ST — names of neighboring entities (either triple direction)
 *   AT — attribute values
 *   AR — attribute property names
 *
 * Structure-relation names (SR) are deliberately not a view. Multi-valued
 * views are deduplicated and joined with "; " in lexicographic order so the
 * output is deterministic regardless of triple order. An entity with no
 * triples gets an empty string for the derived views.
 */

import type { KgDump } from "./triples.js";

export const VIEWS = ["E", "ST", "AT", "AR"] as const;
export type ViewName = (typeof VIEWS)[number];

export type ViewTexts = Record<ViewName, string[]>;

function joinSorted(values: Set<string>): string {
  return [...values].sort().join("; ");
}

export function buildViewTexts(dump: KgDump): ViewTexts {
  const row = new Map<string, number>(dump.entityIds.map((id, i) => [id, i]));
  const n = dump.entityIds.length;

  const neighbors: Array<Set<string>> = Array.from({ length: n }, () => new Set());
  for (const [head, , tail] of dump.relTriples) {
    const h = row.get(head);
    const t = row.get(tail);
    const headName = dump.names.get(head);
    const tailName = dump.names.get(tail);
    if (h !== undefined && tailName !== undefined) neighbors[h]!.add(tailName);
    if (t !== undefined && headName !== undefined) neighbors[t]!.add(headName);
  }

  const values: Array<Set<string>> = Array.from({ length: n }, () => new Set());
  const properties: Array<Set<string>> = Array.from({ length: n }, () => new Set());
  for (const [entity, property, value] of dump.attrTriples) {
    const i = row.get(entity);
    if (i === undefined) continue;
    values[i]!.add(value);
    properties[i]!.add(property);
  }

  return {
    E: dump.entityIds.map((id) => dump.names.get(id) ?? ""),
    ST: neighbors.map(joinSorted),
    AT: values.map(joinSorted),
    AR: properties.map(joinSorted),
  };
}
