// Trajectory chart: one polyline per token probability over the time
// window, dots at the inference instants t = n*pi/2, SVG only.

import { HALF_PI, TraceData, tokenText } from './format.js'
import { colorFor } from './bars.js'

const WIDTH = 660
const HEIGHT = 300
const MARGIN = { left: 46, right: 12, top: 12, bottom: 30 }

function xScale(t: number, t0: number, t1: number): number {
  const span = t1 - t0 || 1
  return MARGIN.left + ((t - t0) / span) * (WIDTH - MARGIN.left - MARGIN.right)
}

function yScale(p: number): number {
  return HEIGHT - MARGIN.bottom - p * (HEIGHT - MARGIN.top - MARGIN.bottom)
}

function halfPiLabel(n: number): string {
  if (n === 0) return '0'
  if (n === 1) return 'π/2'
  if (n === 2) return 'π'
  return n % 2 === 0 ? `${n / 2}π` : `${n}π/2`
}

export function renderTrajectory(root: HTMLElement, trace: TraceData): void {
  const rows = trace.rows
  if (rows.length === 0) {
    root.innerHTML = '<p class="hint">empty trace</p>'
    return
  }
  const t0 = rows[0][0]
  const t1 = rows[rows.length - 1][0]
  const tokens = trace.columns.slice(1)

  const gridY = [0, 0.25, 0.5, 0.75, 1]
    .map(
      (p) => `
        <line x1="${MARGIN.left}" y1="${yScale(p)}" x2="${WIDTH - MARGIN.right}" y2="${yScale(p)}" class="grid"></line>
        <text x="${MARGIN.left - 6}" y="${yScale(p) + 4}" class="tick" text-anchor="end">${p}</text>
      `,
    )
    .join('')

  // vertical markers at the discrete inference instants
  const markers: string[] = []
  for (let n = Math.ceil(t0 / HALF_PI - 1e-9); n * HALF_PI <= t1 + 1e-9; n++) {
    const x = xScale(n * HALF_PI, t0, t1)
    markers.push(`
      <line x1="${x}" y1="${MARGIN.top}" x2="${x}" y2="${HEIGHT - MARGIN.bottom}" class="marker"></line>
      <text x="${x}" y="${HEIGHT - MARGIN.bottom + 16}" class="tick" text-anchor="middle">${halfPiLabel(n)}</text>
    `)
  }

  const series = tokens
    .map((name, i) => {
      const points = rows
        .map((row) => `${xScale(row[0], t0, t1).toFixed(2)},${yScale(row[i + 1]).toFixed(2)}`)
        .join(' ')
      const dots = rows
        .filter((row) => Math.abs(row[0] / HALF_PI - Math.round(row[0] / HALF_PI)) < 1e-6)
        .map(
          (row) =>
            `<circle cx="${xScale(row[0], t0, t1).toFixed(2)}" cy="${yScale(row[i + 1]).toFixed(2)}" r="3.2" fill="${colorFor(i)}"></circle>`,
        )
        .join('')
      return `
        <polyline points="${points}" fill="none" stroke="${colorFor(i)}" stroke-width="1.8" data-series="${name}"></polyline>
        ${dots}
      `
    })
    .join('')

  const legend = tokens
    .map(
      (name, i) => `
        <span class="legend-item">
          <span class="legend-swatch" style="background:${colorFor(i)}"></span>
          ${tokenText(name.replace('p_', '').replace('_', ':'))}
        </span>
      `,
    )
    .join('')

  root.innerHTML = `
    <svg viewBox="0 0 ${WIDTH} ${HEIGHT}" role="img" aria-label="token probabilities over time">
      ${gridY}
      ${markers}
      ${series}
    </svg>
    <div class="legend">${legend}</div>
  `
}
