/**
 * Emit the minified decoder stub.
 *
 *   node dist/build_stub.js --out dist/stub.min.js
 *                           [--check path/to/shipped/stub.min.js]
 *                           [--escape CHAR]
 *
 * --check compares the fresh bytes against an already shipped copy and
 * fails the build on any drift, which is how the Python package and
 * this one are held to the same artifact.
 */

import { readFileSync, mkdirSync, writeFileSync } from "node:fs";
import { dirname } from "node:path";

import { buildStub } from "./viewer.js";

function arg(name: string): string | undefined {
  const i = process.argv.indexOf(name);
  return i >= 0 ? process.argv[i + 1] : undefined;
}

const escapeChar = arg("--escape") ?? "~";
const stub = buildStub({ entries: {}, escapeChar });
const bytes = Buffer.from(stub.minified, "utf-8");
console.log(`stub: ${bytes.length} bytes (budget ${stub.byteBudget})`);

const outPath = arg("--out");
if (outPath) {
  mkdirSync(dirname(outPath), { recursive: true });
  writeFileSync(outPath, bytes);
  console.log(`wrote ${outPath}`);
}

const checkPath = arg("--check");
if (checkPath) {
  const shipped = readFileSync(checkPath);
  if (!shipped.equals(bytes)) {
    console.error(`MISMATCH: ${checkPath} differs from the built stub`);
    process.exit(1);
  }
  console.log(`byte-identical to ${checkPath}`);
}
