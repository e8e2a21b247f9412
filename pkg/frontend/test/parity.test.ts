import { execFileSync } from "node:child_process";
import { mkdtempSync, readFileSync, readdirSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { fileURLToPath } from "node:url";

import { beforeAll, describe, expect, it } from "vitest";

import { runPayload, runPayloadWithoutStreams } from "../src/harness.js";
import { CORE_HEADING, CORE_UNAVAILABLE, DOCUMENT_TITLE } from "../src/viewer.js";

const GENERATOR = fileURLToPath(
  new URL("../../demos/make_parity_corpus.py", import.meta.url),
);
const COUNT = 120;

let corpusDir: string;
let names: string[];

beforeAll(() => {
  corpusDir = mkdtempSync(join(tmpdir(), "parity-"));
  execFileSync("python3", [GENERATOR, corpusDir, String(COUNT)], {
    stdio: "pipe",
  });
  names = readdirSync(corpusDir)
    .filter((n) => n.endsWith(".html"))
    .sort();
}, 120_000);

describe("viewer parity", () => {
  it("covers at least 100 payloads", () => {
    expect(names.length).toBeGreaterThanOrEqual(100);
  });

  it("renders every payload exactly as the host extraction does", async () => {
    for (const name of names) {
      const html = readFileSync(join(corpusDir, name), "utf-8");
      const expected = readFileSync(
        join(corpusDir, name.replace(".html", ".expected.txt")),
        "utf-8",
      );
      const rendered = await runPayload(html);
      // byte-for-byte: compare the encoded forms, not just the strings
      expect(
        Buffer.from(rendered, "utf-8").equals(Buffer.from(expected, "utf-8")),
        `${name} diverged`,
      ).toBe(true);
    }
  }, 120_000);

  it("reproduces the curated landing-sequence block", async () => {
    const html = readFileSync(join(corpusDir, "payload_000.html"), "utf-8");
    const rendered = await runPayload(html);
    expect(rendered).toContain("# --- P63 ---\nP63LM TC PHASCHNG OCT 04024\n");
    expect(rendered).toContain(DOCUMENT_TITLE);
  });

  it("still shows sections when the decompression API is missing", async () => {
    const html = readFileSync(join(corpusDir, "payload_000.html"), "utf-8");
    const rendered = await runPayloadWithoutStreams(html);
    expect(rendered).toContain("# --- P63 ---");
    expect(rendered.endsWith(`${CORE_HEADING}\n${CORE_UNAVAILABLE}`)).toBe(true);
  });
});
