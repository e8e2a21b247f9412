import { readFileSync } from "node:fs";
import { fileURLToPath } from "node:url";
import vm from "node:vm";

import { describe, expect, it } from "vitest";

import { STUB_BYTE_BUDGET, buildStub } from "../src/viewer.js";

const SHIPPED = fileURLToPath(
  new URL("../../src/relicpress/data/stub.min.js", import.meta.url),
);

const DICT = { entries: {}, escapeChar: "~" };

describe("buildStub", () => {
  it("fits the byte budget", () => {
    const stub = buildStub(DICT);
    expect(Buffer.byteLength(stub.minified, "utf-8")).toBeLessThanOrEqual(
      STUB_BYTE_BUDGET,
    );
  });

  it("reproduces the shipped artifact byte for byte", () => {
    const shipped = readFileSync(SHIPPED);
    expect(Buffer.from(buildStub(DICT).minified, "utf-8").equals(shipped)).toBe(
      true,
    );
  });

  it("is deterministic", () => {
    expect(buildStub(DICT)).toEqual(buildStub(DICT));
  });

  it("is valid javascript even for regex-metacharacter escapes", () => {
    for (const escapeChar of ["~", "^", "$", ".", "|"]) {
      const stub = buildStub({ entries: {}, escapeChar });
      expect(() => new vm.Script(stub.minified)).not.toThrow();
      expect(() => new vm.Script(stub.source)).not.toThrow();
    }
  });

  it("rejects stubs over budget", () => {
    expect(() => buildStub(DICT, 100)).toThrow(/over the 100-byte budget/);
  });

  it("rejects malformed escape characters", () => {
    expect(() => buildStub({ entries: {}, escapeChar: "" })).toThrow();
    expect(() => buildStub({ entries: {}, escapeChar: "ab" })).toThrow();
    expect(() => buildStub({ entries: {}, escapeChar: " " })).toThrow();
  });

  it("carries the long-form source alongside the bytes", () => {
    const stub = buildStub(DICT);
    expect(stub.source).toContain("DecompressionStream");
    expect(stub.source).toContain("/~([^])|[^~\\s]/g");
  });
});
