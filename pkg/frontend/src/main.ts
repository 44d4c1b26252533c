// DOM wiring for the measurement console. All physics lives on the
// server; this file only routes clicks to the controller and paints the
// latest snapshot.

import { ApiClient } from './api.js'
import { renderBars, renderMeasureControls } from './bars.js'
import { renderTrajectory } from './chart.js'
import { formatTime } from './format.js'
import { PRESETS } from './presets.js'
import { ConsoleController, ConsoleState } from './state.js'

const TWO_PI = 2 * Math.PI

const LAYOUT = `
  <header>
    <h1>Liar-system measurement console</h1>
    <p class="lede">Author a self-referential sentence system, hypothesize truth values, and watch the truth cycle evolve.</p>
  </header>

  <section class="author">
    <div class="preset-row" id="presets"></div>
    <textarea id="dsl" rows="4" spellcheck="false" placeholder="(1) sentence (2) is false&#10;(2) sentence (1) is true"></textarea>
    <div class="author-row">
      <button id="author">create session</button>
      <span id="verdict" class="badge" hidden></span>
      <span id="assignments" class="assignments"></span>
    </div>
    <div id="error" class="error" hidden></div>
  </section>

  <section class="session" id="session" hidden>
    <div class="session-head">
      <span id="clock" class="clock">t = 0</span>
      <button id="step">step π/2</button>
      <button id="play">play</button>
      <label class="rate">rate
        <select id="rate">
          <option value="0.5">0.5×</option>
          <option value="1" selected>1×</option>
          <option value="2">2×</option>
          <option value="4">4×</option>
        </select>
      </label>
      <button id="release">release</button>
      <span id="outcome" class="outcome"></span>
    </div>
    <div id="bars"></div>
    <div id="controls"></div>
  </section>

  <section class="trajectory" id="trajectory-panel" hidden>
    <h2>Trajectory</h2>
    <div class="traj-row">
      <label>t0 <input id="t0" type="number" value="0" step="0.1"></label>
      <label>t1 <input id="t1" type="number" value="${(TWO_PI).toFixed(4)}" step="0.1"></label>
      <label>dt <input id="dt" type="number" value="${(Math.PI / 50).toFixed(4)}" step="0.01"></label>
      <button id="plot">plot</button>
      <span id="trace-error" class="error-inline"></span>
    </div>
    <div id="chart"></div>
  </section>
`

function must<T extends Element>(root: ParentNode, selector: string): T {
  const el = root.querySelector<T>(selector)
  if (!el) throw new Error(`missing ${selector}`)
  return el
}

export interface ConsoleApp {
  controller: ConsoleController
  api: ApiClient
  root: HTMLElement
}

export function initConsole(root: HTMLElement, apiBase = ''): ConsoleApp {
  root.innerHTML = LAYOUT

  const dsl = must<HTMLTextAreaElement>(root, '#dsl')
  const verdict = must<HTMLSpanElement>(root, '#verdict')
  const assignmentsEl = must<HTMLSpanElement>(root, '#assignments')
  const errorEl = must<HTMLDivElement>(root, '#error')
  const sessionEl = must<HTMLElement>(root, '#session')
  const trajectoryPanel = must<HTMLElement>(root, '#trajectory-panel')
  const clock = must<HTMLSpanElement>(root, '#clock')
  const outcome = must<HTMLSpanElement>(root, '#outcome')
  const bars = must<HTMLDivElement>(root, '#bars')
  const controls = must<HTMLDivElement>(root, '#controls')
  const chart = must<HTMLDivElement>(root, '#chart')
  const traceError = must<HTMLSpanElement>(root, '#trace-error')
  const playButton = must<HTMLButtonElement>(root, '#play')

  const api = new ApiClient(apiBase)

  const render = (state: ConsoleState) => {
    if (state.error) {
      const where = state.error.line !== undefined ? ` (line ${state.error.line})` : ''
      errorEl.textContent = `${state.error.code}: ${state.error.message}${where}`
      errorEl.hidden = false
      highlightLine(state.error.line)
    } else {
      errorEl.hidden = true
      highlightLine(undefined)
    }

    const snap = state.snapshot
    sessionEl.hidden = snap === null
    trajectoryPanel.hidden = snap === null
    if (!snap) return

    verdict.textContent = snap.verdict
    verdict.className = `badge badge-${snap.verdict}`
    verdict.hidden = false
    assignmentsEl.textContent =
      state.assignments.length === 0
        ? 'no consistent assignment'
        : 'consistent: ' + state.assignments.map((a) => a.map((v) => (v === 'true' ? 'T' : 'F')).join('')).join(', ')

    clock.textContent = formatTime(snap.time)
    outcome.textContent = state.lastOutcome ?? ''
    playButton.textContent = state.playing ? 'pause' : 'play'

    renderBars(bars, snap)
    renderMeasureControls(controls, snap, controller.sentences(), {
      onHypothesis: (s, v) => void controller.measure(s, v ? 'true' : 'false'),
      onSample: (s) => void controller.measure(s, 'sample'),
    })

    if (state.trace) {
      renderTrajectory(chart, state.trace)
    }
    traceError.textContent = state.traceError ?? ''
  }

  const controller = new ConsoleController(api, render)

  const highlightLine = (line: number | undefined) => {
    const marker = root.querySelector('#line-marker')
    if (marker) marker.remove()
    if (line === undefined) return
    const lines = dsl.value.split('\n')
    const text = lines[line - 1] ?? ''
    dsl.insertAdjacentHTML(
      'afterend',
      `<div id="line-marker" class="line-marker">line ${line}: <code>${text.replace(/</g, '&lt;')}</code></div>`,
    )
  }

  const presetsEl = must<HTMLDivElement>(root, '#presets')
  presetsEl.innerHTML = PRESETS.map(
    (p) => `<button class="preset" data-preset="${p.key}">${p.label}</button>`,
  ).join('')
  presetsEl.querySelectorAll<HTMLButtonElement>('button[data-preset]').forEach((btn) => {
    btn.addEventListener('click', () => {
      const preset = PRESETS.find((p) => p.key === btn.dataset.preset)
      if (!preset) return
      dsl.value = preset.dsl
      void controller.authorSystem(preset.dsl)
    })
  })

  must<HTMLButtonElement>(root, '#author').addEventListener('click', () => {
    void controller.authorSystem(dsl.value)
  })
  must<HTMLButtonElement>(root, '#step').addEventListener('click', () => {
    void controller.evolveBy(Math.PI / 2)
  })
  playButton.addEventListener('click', () => {
    if (controller.state.playing) controller.pause()
    else controller.play()
  })
  must<HTMLSelectElement>(root, '#rate').addEventListener('change', (ev) => {
    controller.setPlaybackRate(Number((ev.target as HTMLSelectElement).value))
  })
  must<HTMLButtonElement>(root, '#release').addEventListener('click', () => {
    void controller.release()
  })
  must<HTMLButtonElement>(root, '#plot').addEventListener('click', () => {
    const t0 = Number(must<HTMLInputElement>(root, '#t0').value)
    const t1 = Number(must<HTMLInputElement>(root, '#t1').value)
    const dt = Number(must<HTMLInputElement>(root, '#dt').value)
    void controller.loadTrace(t0, t1, dt)
  })

  return { controller, api, root }
}

declare global {
  interface Window {
    liarsimConsole?: ConsoleApp
  }
}

if (typeof document !== 'undefined' && document.getElementById('app')) {
  window.liarsimConsole = initConsole(document.getElementById('app') as HTMLElement)
}
