import init, { ldlr_curve, phase_grid, balanced_motif } from "./pkg/plantlab_wasm.js";

const num = (box, name) => Number(box.querySelector(`[name=${name}]`).value);

function report(box, text, isError = false) {
  const out = box.querySelector(".out");
  out.textContent = text;
  out.className = isError ? "out err" : "out";
}

function axes(ctx, w, h, pad) {
  ctx.clearRect(0, 0, w, h);
  ctx.strokeStyle = "#888";
  ctx.beginPath();
  ctx.moveTo(pad, pad / 2);
  ctx.lineTo(pad, h - pad);
  ctx.lineTo(w - pad / 2, h - pad);
  ctx.stroke();
}

function drawCurve(box) {
  const canvas = box.querySelector("canvas");
  const ctx = canvas.getContext("2d");
  const res = JSON.parse(ldlr_curve(
    num(box, "r"), num(box, "alpha"), num(box, "beta"), num(box, "gamma"),
    num(box, "degree"), num(box, "lo"), num(box, "hi"), 80));
  const pts = res.curve.map(c => [Math.log10(c.n), c.log10_ldlr_minus_1]);
  const ys = pts.map(p => p[1]);
  const [x0, x1] = [pts[0][0], pts[pts.length - 1][0]];
  const [y0, y1] = [Math.min(...ys, -3), Math.max(...ys, 1)];
  const pad = 40, w = canvas.width, h = canvas.height;
  const sx = x => pad + (x - x0) / (x1 - x0) * (w - 1.5 * pad);
  const sy = y => h - pad - (y - y0) / (y1 - y0) * (h - 1.5 * pad);
  axes(ctx, w, h, pad);
  ctx.fillStyle = "#555";
  ctx.fillText(`log10 n: ${x0} .. ${x1}`, pad, h - 12);
  ctx.fillText(`log10(norm - 1): ${y0.toFixed(1)} .. ${y1.toFixed(1)}`, pad + 4, 14);
  ctx.strokeStyle = "#ccc";
  ctx.beginPath();
  ctx.moveTo(pad, sy(0));
  ctx.lineTo(w - pad / 2, sy(0));
  ctx.stroke();
  ctx.strokeStyle = res.regime === "hard" ? "#1f6fb2" : "#c2410c";
  ctx.lineWidth = 2;
  ctx.beginPath();
  pts.forEach(([x, y], i) => (i ? ctx.lineTo(sx(x), sy(y)) : ctx.moveTo(sx(x), sy(y))));
  ctx.stroke();
  ctx.lineWidth = 1;
  report(box, `${res.regime} (threshold α = ${res.threshold.toFixed(4)})`);
}

function drawPhase(box) {
  const canvas = box.querySelector("canvas");
  const ctx = canvas.getContext("2d");
  const res = JSON.parse(phase_grid(
    num(box, "r"), num(box, "beta"), BigInt(num(box, "n")), num(box, "degree"), num(box, "steps")));
  const w = canvas.width, h = canvas.height, k = res.steps;
  const cw = w / k, ch = h / k;
  ctx.clearRect(0, 0, w, h);
  for (const c of res.cells) {
    const i = Math.floor(c.alpha / res.alpha_max * k);
    const j = Math.floor(c.gamma * k);
    let color = "#eee";
    if (c.regime !== "invalid" && c.log10_ldlr_minus_1 != null) {
      // Blue when the norm stays near 1, red when it is large.
      const t = Math.max(0, Math.min(1, (c.log10_ldlr_minus_1 + 4) / 6));
      color = `rgb(${Math.round(255 * t)}, 80, ${Math.round(255 * (1 - t))})`;
    }
    ctx.fillStyle = color;
    ctx.fillRect(i * cw, h - (j + 1) * ch, cw, ch);
  }
  ctx.strokeStyle = "#000";
  ctx.lineWidth = 2;
  ctx.beginPath();
  res.threshold.forEach(([g, a], i) => {
    const x = a / res.alpha_max * w, y = h - g * h;
    i ? ctx.lineTo(x, y) : ctx.moveTo(x, y);
  });
  ctx.stroke();
  ctx.lineWidth = 1;
  report(box, `α across (0, ${res.alpha_max}), γ up (0, 1); black line is the threshold`);
}

function drawMotif(box) {
  const canvas = box.querySelector("canvas");
  const ctx = canvas.getContext("2d");
  const res = JSON.parse(balanced_motif(num(box, "alpha"), num(box, "beta"), num(box, "gamma"), num(box, "r")));
  const m = res.motif;
  const w = canvas.width, h = canvas.height, rad = w * 0.38;
  const pos = v => {
    const t = 2 * Math.PI * (v - 1) / m.ell - Math.PI / 2;
    return [w / 2 + rad * Math.cos(t), h / 2 + rad * Math.sin(t)];
  };
  ctx.clearRect(0, 0, w, h);
  m.edges.forEach((e, i) => {
    ctx.strokeStyle = ctx.fillStyle = `hsla(${(i * 137) % 360}, 60%, 45%, 0.7)`;
    const ps = e.map(pos);
    ctx.beginPath();
    ps.forEach(([x, y], k) => (k ? ctx.lineTo(x, y) : ctx.moveTo(x, y)));
    if (ps.length > 2) {
      ctx.closePath();
      ctx.globalAlpha = 0.15;
      ctx.fill();
      ctx.globalAlpha = 1;
    }
    ctx.stroke();
  });
  ctx.fillStyle = "#000";
  for (let v = 1; v <= m.ell; v++) {
    const [x, y] = pos(v);
    ctx.beginPath();
    ctx.arc(x, y, 5, 0, 2 * Math.PI);
    ctx.fill();
  }
  report(box, `ℓ = ${m.ell}, m = ${m.m}, m/ℓ = ${m.ratio}`);
  box.querySelector("pre").textContent = JSON.stringify(res, null, 2);
}

function wire(id, draw) {
  const box = document.getElementById(id);
  const run = () => {
    try {
      draw(box);
    } catch (e) {
      report(box, String(e.message ?? e), true);
    }
  };
  box.querySelector("button").addEventListener("click", run);
  run();
}

await init();
wire("curve", drawCurve);
wire("phase", drawPhase);
wire("motif", drawMotif);
