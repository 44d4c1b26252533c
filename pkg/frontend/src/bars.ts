// Probability bars and measurement controls. A make-true/make-false
// button is disabled exactly when its token's server-reported weight is
// below the zero-amplitude threshold.

import { Snapshot } from './api.js'
import { formatProb, isHypothesisEnabled, parseTokenLabel, tokenText } from './format.js'

export const TOKEN_COLORS = ['#e4572e', '#3d9970', '#4062bb', '#b86bd4', '#c98a1c', '#2aa8a8']

export function colorFor(index: number): string {
  return TOKEN_COLORS[index % TOKEN_COLORS.length]
}

export function renderBars(root: HTMLElement, snapshot: Snapshot): void {
  const entries = Object.entries(snapshot.probabilities)
  root.innerHTML = entries
    .map(([label, p], i) => {
      const pct = Math.max(0, Math.min(100, p * 100))
      return `
        <div class="bar-row" data-token="${label}">
          <div class="bar-label">${tokenText(label)}</div>
          <div class="bar-track">
            <div class="bar-fill" style="width:${pct}%;background:${colorFor(i)}"></div>
          </div>
          <div class="bar-value" data-value-for="${label}">${formatProb(p)}</div>
        </div>
      `
    })
    .join('')
}

export interface MeasureHandlers {
  onHypothesis(sentence: number, value: boolean): void
  onSample(sentence: number): void
}

export function renderMeasureControls(
  root: HTMLElement,
  snapshot: Snapshot,
  sentences: number[],
  handlers: MeasureHandlers,
): void {
  root.innerHTML = sentences
    .map((s) => {
      const pTrue = snapshot.probabilities[`${s}:true`] ?? 0
      const pFalse = snapshot.probabilities[`${s}:false`] ?? 0
      return `
        <div class="measure-row">
          <span class="measure-label">sentence (${s})</span>
          <button data-measure="${s}:true" ${isHypothesisEnabled(pTrue) ? '' : 'disabled'}>make true</button>
          <button data-measure="${s}:false" ${isHypothesisEnabled(pFalse) ? '' : 'disabled'}>make false</button>
          <button data-sample="${s}">sample</button>
        </div>
      `
    })
    .join('')
  root.querySelectorAll<HTMLButtonElement>('button[data-measure]').forEach((btn) => {
    const { sentence, value } = parseTokenLabel(btn.dataset.measure as string)
    btn.addEventListener('click', () => handlers.onHypothesis(sentence, value))
  })
  root.querySelectorAll<HTMLButtonElement>('button[data-sample]').forEach((btn) => {
    btn.addEventListener('click', () => handlers.onSample(Number(btn.dataset.sample)))
  })
}
