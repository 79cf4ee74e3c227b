import init, { confidence_curve, assurance_curves, render_table } from "./pkg/binrel_wasm.js";

const COLORS = ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#000000"];

const $ = (id) => document.getElementById(id);

function report(id, err) {
  const el = $(id);
  el.textContent = err ? String(err) : "";
  el.className = err ? "err" : "";
}

// series: [{ xs, ys, color }], both axes scaled to [xMin, xMax] x [0, 1]
function plot(canvas, series, xMin, xMax, xLabel, yLabel) {
  const ctx = canvas.getContext("2d");
  const w = canvas.width, h = canvas.height, pad = 40;
  const sx = (x) => pad + (x - xMin) / (xMax - xMin) * (w - 2 * pad);
  const sy = (y) => h - pad - y * (h - 2 * pad);
  ctx.clearRect(0, 0, w, h);

  ctx.strokeStyle = "#ddd";
  ctx.fillStyle = "#555";
  ctx.font = "11px sans-serif";
  for (let i = 0; i <= 10; i++) {
    const y = sy(i / 10);
    ctx.beginPath(); ctx.moveTo(pad, y); ctx.lineTo(w - pad, y); ctx.stroke();
    ctx.fillText(`${i * 10}%`, 4, y + 4);
  }
  ctx.fillText(String(xMin), pad, h - pad + 14);
  ctx.fillText(String(xMax), w - pad - 20, h - pad + 14);
  ctx.fillText(xLabel, w / 2 - 30, h - 8);
  ctx.fillText(yLabel, pad, pad - 10);

  for (const { xs, ys, color } of series) {
    ctx.strokeStyle = color;
    ctx.lineWidth = 1.5;
    ctx.beginPath();
    xs.forEach((x, i) => (i ? ctx.lineTo(sx(x), sy(ys[i])) : ctx.moveTo(sx(x), sy(ys[i]))));
    ctx.stroke();
  }
}

function drawConfidence() {
  const n = Number($("cc-n").value), f = Number($("cc-f").value), points = 201;
  try {
    const ys = Array.from(confidence_curve(n, f, points));
    const xs = ys.map((_, i) => i / (points - 1));
    plot($("cc-plot"), [{ xs, ys, color: COLORS[0] }], 0, 1, "reliability", "confidence");
    report("cc-msg");
  } catch (e) {
    report("cc-msg", e);
  }
}

function drawAssurance() {
  const nMax = Number($("as-n").value), fMax = Number($("as-f").value);
  try {
    const flat = assurance_curves(nMax, fMax);
    const xs = Array.from({ length: nMax }, (_, i) => i + 1);
    const series = [];
    for (let f = 0; f <= fMax; f++) {
      const ys = Array.from(flat.subarray(f * nMax, (f + 1) * nMax));
      series.push({ xs, ys, color: COLORS[f % COLORS.length] });
    }
    plot($("as-plot"), series, 1, nMax, "samples", "assurance");
    report("as-msg", null);
    $("as-msg").textContent = series.map((_, f) => `f = ${f}`).join(", ") + " (colour order as listed)";
  } catch (e) {
    report("as-msg", e);
  }
}

function drawTable() {
  const tol = $("tb-tol").value.trim();
  try {
    $("tb-out").textContent = render_table($("tb-preset").value, $("tb-format").value, 1,
                                           tol === "" ? undefined : Number(tol));
    $("tb-out").className = "";
  } catch (e) {
    $("tb-out").textContent = String(e);
    $("tb-out").className = "err";
  }
}

await init();
for (const id of ["cc-n", "cc-f"]) $(id).addEventListener("input", drawConfidence);
for (const id of ["as-n", "as-f"]) $(id).addEventListener("input", drawAssurance);
for (const id of ["tb-preset", "tb-format", "tb-tol"]) $(id).addEventListener("input", drawTable);
drawConfidence();
drawAssurance();
drawTable();
