/**
 * Reference implementation of the payload decoder stub.
 *
 * The stub that ships inside every payload is a minified one-liner; this
 * module is the readable statement of what those bytes do, plus the
 * build step that produces them. The contract: executing the stub in a
 * document must display exactly the text the host-side extraction
 * computes for the same payload.
 */

export interface TokenDictionary {
  /** single character -> mnemonic */
  entries: Record<string, string>;
  escapeChar: string;
}

export interface ViewerStub {
  /** readable long-form source, for humans */
  source: string;
  /** the exact bytes embedded in payloads */
  minified: string;
  byteBudget: number;
}

export const DOCUMENT_TITLE = "# APOLLO 11 LUNAR MODULE CODE";
export const CORE_HEADING = "# Decompressed core:";
export const CORE_UNAVAILABLE = "[core unavailable]";
export const STUB_BYTE_BUDGET = 400;

/**
 * Expand a tokenized core. One pass, one character at a time: the
 * escape character quotes the next character, any other non-whitespace
 * character is looked up in the dictionary, whitespace flows through.
 * A dangling trailing escape also flows through untouched.
 */
export function spliceCore(text: string, dict: TokenDictionary): string {
  const rx = new RegExp(`${escapeRegExp(dict.escapeChar)}([^])|[^${escapeRegExp(dict.escapeChar)}\\s]`, "g");
  return text.replace(rx, (m, quoted: string | undefined) =>
    quoted === undefined ? dict.entries[m] || m : quoted,
  );
}

/** The full text the viewer renders: title, section blocks, core. */
export function renderDocument(
  sections: Record<string, string>,
  coreText: string,
): string {
  let out = DOCUMENT_TITLE + "\n\n";
  for (const id of Object.keys(sections)) {
    out += `# --- ${id} ---\n${sections[id]}\n\n`;
  }
  return out + CORE_HEADING + "\n" + coreText;
}

function escapeRegExp(char: string): string {
  return char.replace(/[.*+?^${}()|[\]\\]/g, "\\$&");
}

// The template the build emits, with ~ standing in for the dictionary's
// escape character (it appears only inside the regex literal). Changing
// anything here changes the shipped artifact bytes; the budget test and
// the byte-identity check against the Python package both gate it.
const STUB_TEMPLATE =
  '(async()=>{let h="# APOLLO 11 LUNAR MODULE CODE\\n\\n",k,t;' +
  'for(k in S)h+="# --- "+k+" ---\\n"+S[k]+"\\n\\n";' +
  'h+="# Decompressed core:\\n";' +
  'try{t=await new Response(new Blob([Uint8Array.from(atob(B),c=>c.charCodeAt(0))])' +
  '.stream().pipeThrough(new DecompressionStream("deflate-raw"))).text();' +
  "h+=t.replace(/@ESC@([^])|[^@ESC@\\s]/g,(m,e)=>e==null?D[m]||m:e)}" +
  'catch(e){h+="[core unavailable]"}o.textContent=h})()';

/** Long-form equivalent of the template, kept next to it for review. */
const STUB_SOURCE = `(async () => {
  // globals provided by the surrounding payload:
  //   D  token dictionary, single character -> mnemonic
  //   S  expanded sections, id -> verbatim text
  //   B  base64 of the raw-deflate compressed core
  //   o  the <pre> element the document renders into
  let text = ${JSON.stringify(DOCUMENT_TITLE + "\n\n")};
  for (const id in S) {
    text += "# --- " + id + " ---\\n" + S[id] + "\\n\\n";
  }
  text += ${JSON.stringify(CORE_HEADING + "\n")};
  try {
    const bytes = Uint8Array.from(atob(B), (c) => c.charCodeAt(0));
    const stream = new Blob([bytes])
      .stream()
      .pipeThrough(new DecompressionStream("deflate-raw"));
    const core = await new Response(stream).text();
    // escape char quotes the next character; other non-whitespace
    // characters expand through the dictionary
    text += core.replace(/@ESC@([^])|[^@ESC@\\s]/g, (m, e) =>
      e == null ? D[m] || m : e,
    );
  } catch (e) {
    // no DecompressionStream (or a corrupt blob): the verbatim
    // sections above still stand, only the core is lost
    text += ${JSON.stringify(CORE_UNAVAILABLE)};
  }
  o.textContent = text;
})();
`;

/**
 * Produce the stub for a dictionary's escape character. The output is
 * deterministic: same escape character, same bytes.
 */
export function buildStub(
  dict: TokenDictionary,
  byteBudget: number = STUB_BYTE_BUDGET,
): ViewerStub {
  if (dict.escapeChar.length !== 1 || /\s/.test(dict.escapeChar)) {
    throw new Error("escape character must be a single non-whitespace character");
  }
  const escaped = escapeRegExp(dict.escapeChar);
  const minified = STUB_TEMPLATE.replaceAll("@ESC@", escaped);
  const source = STUB_SOURCE.replaceAll("@ESC@", escaped);
  const size = new TextEncoder().encode(minified).length;
  if (size > byteBudget) {
    throw new Error(`stub is ${size} bytes, over the ${byteBudget}-byte budget`);
  }
  return { source, minified, byteBudget };
}
