import init, { props, gcd, normalize } from "./pkg/polycomp_web.js";

const $ = (id) => document.getElementById(id);

function show(out, raw) {
  const r = JSON.parse(raw);
  const stream = r.code === 0 ? r.stdout : r.stderr;
  let text = stream;
  try {
    const doc = JSON.parse(stream);
    text = JSON.stringify(r.code === 0 ? doc.result : doc, null, 2);
  } catch (_) {}
  out.textContent = text;
  out.className = r.code === 0 ? "" : "err";
}

await init();

$("props-go").onclick = () => show($("props-out"), props($("ring").value));
$("gcd-go").onclick = () => show($("gcd-out"), gcd($("ring").value, $("gcd-a").value, $("gcd-b").value));
$("nf-go").onclick = () => show($("nf-out"), normalize($("ring").value, $("nf-ideal").value));
