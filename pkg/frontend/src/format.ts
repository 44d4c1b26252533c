// Display formatting and trace parsing. Probabilities show 4 decimals;
// a control is considered dead when its token weight drops below the
// zero-amplitude threshold the server uses.

export const PROB_DECIMALS = 4
export const ZERO_AMPLITUDE = 1e-12
export const HALF_PI = Math.PI / 2

export function formatProb(p: number): string {
  return p.toFixed(PROB_DECIMALS)
}

export function formatTime(t: number): string {
  const steps = t / HALF_PI
  const rounded = Math.round(steps)
  if (Math.abs(steps - rounded) < 1e-9) {
    if (rounded === 0) return 't = 0'
    return rounded === 1 ? 't = π/2' : `t = ${rounded}π/2`
  }
  return `t = ${t.toFixed(3)}`
}

export function isHypothesisEnabled(probability: number): boolean {
  return probability >= ZERO_AMPLITUDE
}

/** "1:true" -> { sentence: 1, value: true } */
export function parseTokenLabel(label: string): { sentence: number; value: boolean } {
  const [s, v] = label.split(':')
  return { sentence: Number(s), value: v === 'true' }
}

export function tokenText(label: string): string {
  const { sentence, value } = parseTokenLabel(label)
  return `(${sentence}) ${value ? 'true' : 'false'}`
}

export interface TraceData {
  columns: string[]
  rows: number[][]
}

export function parseTraceCsv(text: string): TraceData {
  const lines = text.trim().split('\n')
  const columns = lines[0].split(',')
  const rows = lines.slice(1).map((line) => line.split(',').map(Number))
  return { columns, rows }
}

/** Columns ordered by when each token's probability peaks. */
export function peakOrder(trace: TraceData): string[] {
  const peaks = trace.columns.slice(1).map((name, i) => {
    let best = -1
    let bestT = 0
    for (const row of trace.rows) {
      if (row[i + 1] > best) {
        best = row[i + 1]
        bestT = row[0]
      }
    }
    return { name, bestT }
  })
  peaks.sort((a, b) => a.bestT - b.bestT)
  return peaks.map((p) => p.name)
}
