import { deflateRawSync } from "node:zlib";

import { describe, expect, it } from "vitest";

import { runPayload } from "../src/harness.js";
import {
  CORE_HEADING,
  CORE_UNAVAILABLE,
  DOCUMENT_TITLE,
  type TokenDictionary,
  buildStub,
  renderDocument,
  spliceCore,
} from "../src/viewer.js";

const DICT: TokenDictionary = {
  entries: { a: "TC", b: "TS", c: "CAF", q: "BANKCALL" },
  escapeChar: "~",
};

describe("spliceCore", () => {
  it("expands tokens", () => {
    expect(spliceCore("a BANKCALL", DICT)).toBe("TC BANKCALL");
    expect(spliceCore("a q\nc ZERO", DICT)).toBe("TC BANKCALL\nCAF ZERO");
  });

  it("passes escaped characters through bare", () => {
    expect(spliceCore("~a~b", DICT)).toBe("ab");
    expect(spliceCore("x~~y", DICT)).toBe("x~y");
  });

  it("leaves whitespace and unknown characters alone", () => {
    expect(spliceCore("  \t\n", DICT)).toBe("  \t\n");
    expect(spliceCore("P63LM a PHASCHNG", DICT)).toBe("P63LM TC PHASCHNG");
  });

  it("passes a dangling trailing escape through", () => {
    expect(spliceCore("x~", DICT)).toBe("x~");
    expect(spliceCore("~", DICT)).toBe("~");
  });

  it("honors alternative escape characters, including regex metachars", () => {
    const dict: TokenDictionary = { entries: { a: "TC" }, escapeChar: "^" };
    expect(spliceCore("^a a", dict)).toBe("a TC");
  });
});

describe("renderDocument", () => {
  it("renders title, section blocks, then the core", () => {
    const text = renderDocument({ P63: "TC BANKCALL\n" }, "CAF ZERO\n");
    expect(text).toBe(
      `${DOCUMENT_TITLE}\n\n# --- P63 ---\nTC BANKCALL\n\n\n${CORE_HEADING}\nCAF ZERO\n`,
    );
  });

  it("degenerates to title and heading with nothing to show", () => {
    expect(renderDocument({}, "")).toBe(`${DOCUMENT_TITLE}\n\n${CORE_HEADING}\n`);
  });
});

// A payload assembled by hand; the reference functions must predict the
// stub's rendering of it exactly.
function makePayload(
  dict: TokenDictionary,
  sections: Record<string, string>,
  core: string,
): string {
  const stub = buildStub(dict);
  const blob = deflateRawSync(Buffer.from(core, "utf-8"));
  const sectionJs = Object.entries(sections)
    .map(([k, v]) => `${JSON.stringify(k)}:\`${v}\``)
    .join(",");
  return (
    '<!DOCTYPE html><html><body style="font-family:monospace">\n' +
    '<pre id="o">Loading...</pre><script>\n' +
    `D=${JSON.stringify(dict.entries)};\n` +
    `S={${sectionJs}};\n` +
    `B="${blob.toString("base64")}";\n` +
    `${stub.minified}\n` +
    "</script></body></html>"
  );
}

describe("stub against reference", () => {
  it("agrees on a tokenized core with sections", async () => {
    const sections = { P63: "P63LM TC PHASCHNG\n" };
    const core = "a q\n~a literal\nc ZERO\n";
    const rendered = await runPayload(makePayload(DICT, sections, core));
    expect(rendered).toBe(renderDocument(sections, spliceCore(core, DICT)));
  });

  it("agrees on an empty payload", async () => {
    const rendered = await runPayload(makePayload(DICT, {}, ""));
    expect(rendered).toBe(renderDocument({}, ""));
  });

  it("shows the fallback line for a corrupt blob", async () => {
    const html = makePayload(DICT, { A: "kept\n" }, "a q").replace(
      /B="[^"]*"/,
      'B="AAAA"',
    );
    const rendered = await runPayload(html);
    expect(rendered).toBe(renderDocument({ A: "kept\n" }, CORE_UNAVAILABLE));
  });
});
