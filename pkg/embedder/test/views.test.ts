import { describe, expect, it } from "vitest";

import { buildViewTexts, VIEWS } from "../src/views.js";
import type { KgDump } from "../src/triples.js";
import { nameFromUri } from "../src/triples.js";

function dump(partial: Partial<KgDump>): KgDump {
  return {
    entityIds: [],
    names: new Map(),
    relTriples: [],
    attrTriples: [],
    ...partial,
  };
}

describe("buildViewTexts", () => {
  it("joins neighbor names lexicographically with '; '", () => {
    const d = dump({
      entityIds: ["1", "2", "3"],
      names: new Map([
        ["1", "X"],
        ["2", "B"],
        ["3", "A"],
      ]),
      relTriples: [
        ["1", "r1", "2"],
        ["1", "r2", "3"],
      ],
    });
    expect(buildViewTexts(d).ST[0]).toBe("A; B");
  });

  it("includes both triple directions as neighbors", () => {
    const d = dump({
      entityIds: ["1", "2"],
      names: new Map([
        ["1", "One"],
        ["2", "Two"],
      ]),
      relTriples: [["2", "r", "1"]],
    });
    const texts = buildViewTexts(d);
    expect(texts.ST[0]).toBe("Two");
    expect(texts.ST[1]).toBe("One");
  });

  it("gives empty strings for entities with no triples", () => {
    const d = dump({ entityIds: ["1"], names: new Map([["1", "Solo"]]) });
    const texts = buildViewTexts(d);
    expect(texts.E[0]).toBe("Solo");
    expect(texts.ST[0]).toBe("");
    expect(texts.AT[0]).toBe("");
    expect(texts.AR[0]).toBe("");
  });

  it("separates attribute values (AT) from property names (AR)", () => {
    const d = dump({
      entityIds: ["1"],
      names: new Map([["1", "City"]]),
      attrTriples: [
        ["1", "population", "1000"],
        ["1", "area", "42.5"],
      ],
    });
    const texts = buildViewTexts(d);
    expect(texts.AT[0]).toBe("1000; 42.5");
    expect(texts.AR[0]).toBe("area; population");
  });

  it("deduplicates repeated values", () => {
    const d = dump({
      entityIds: ["1"],
      names: new Map([["1", "N"]]),
      attrTriples: [
        ["1", "p", "v"],
        ["1", "q", "v"],
      ],
    });
    expect(buildViewTexts(d).AT[0]).toBe("v");
  });

  it("never emits a structure-relation (SR) view", () => {
    expect(VIEWS).toEqual(["E", "ST", "AT", "AR"]);
    const d = dump({
      entityIds: ["1", "2"],
      names: new Map([
        ["1", "A"],
        ["2", "B"],
      ]),
      relTriples: [["1", "bornIn", "2"]],
    });
    const texts = buildViewTexts(d);
    for (const view of VIEWS) {
      expect(texts[view].join(" ")).not.toContain("bornIn");
    }
  });

  it("is order-insensitive in triple input", () => {
    const names = new Map([
      ["1", "Hub"],
      ["2", "B"],
      ["3", "A"],
    ]);
    const forward = dump({
      entityIds: ["1", "2", "3"],
      names,
      relTriples: [
        ["1", "r", "2"],
        ["1", "r", "3"],
      ],
    });
    const reversed = dump({
      entityIds: ["1", "2", "3"],
      names,
      relTriples: [
        ["1", "r", "3"],
        ["1", "r", "2"],
      ],
    });
    expect(buildViewTexts(forward)).toEqual(buildViewTexts(reversed));
  });
});

describe("nameFromUri", () => {
  it("takes the last URI segment and restores spaces", () => {
    expect(nameFromUri("http://dbpedia.org/resource/New_York_City")).toBe("New York City");
  });

  it("passes plain names through", () => {
    expect(nameFromUri("Tokyo")).toBe("Tokyo");
  });
});
