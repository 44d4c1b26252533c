// @vitest-environment jsdom
//
// Scripted console session against the live Python service: load the
// classic double liar, make sentence 1 false, chart the trajectory,
// play to t = 2*pi in the standard play steps, release. Displayed
// values must match the API at every step.
import { type ChildProcess, spawn } from 'node:child_process'
import { afterAll, beforeAll, describe, expect, it } from 'vitest'

import { PLAY_DT } from '../src/state.js'
import { peakOrder } from '../src/format.js'
import { initConsole, type ConsoleApp } from '../src/main.js'

const PORT = 8930 + (process.pid % 57)
const BASE = `http://127.0.0.1:${PORT}`
const TWO_PI = 2 * Math.PI

let server: ChildProcess

async function waitFor(cond: () => boolean, ms = 10_000): Promise<void> {
  const start = Date.now()
  while (!cond()) {
    if (Date.now() - start > ms) throw new Error('timed out waiting for condition')
    await new Promise((r) => setTimeout(r, 15))
  }
}

async function serverUp(): Promise<boolean> {
  try {
    const resp = await fetch(`${BASE}/api/sessions/probe`)
    return resp.status === 404
  } catch {
    return false
  }
}

beforeAll(async () => {
  server = spawn('python3', ['-m', 'liarsim.cli', 'serve', '--port', String(PORT)], {
    stdio: 'ignore',
  })
  const start = Date.now()
  while (!(await serverUp())) {
    if (Date.now() - start > 30_000) throw new Error('service did not come up')
    await new Promise((r) => setTimeout(r, 200))
  }
})

afterAll(() => {
  server?.kill()
})

function displayedProbs(root: HTMLElement): Record<string, number> {
  const out: Record<string, number> = {}
  root.querySelectorAll<HTMLElement>('[data-value-for]').forEach((el) => {
    out[el.dataset.valueFor as string] = Number(el.textContent)
  })
  return out
}

async function expectDisplayedMatchesApi(root: HTMLElement, id: string): Promise<void> {
  const displayed = displayedProbs(root)
  const resp = await fetch(`${BASE}/api/sessions/${id}`)
  const snapshot = (await resp.json()) as { probabilities: Record<string, number> }
  const tokens = Object.keys(snapshot.probabilities)
  expect(Object.keys(displayed).sort()).toEqual(tokens.slice().sort())
  for (const token of tokens) {
    expect(Math.abs(displayed[token] - snapshot.probabilities[token])).toBeLessThanOrEqual(5e-4)
  }
}

describe('console end to end', () => {
  let app: ConsoleApp
  let root: HTMLElement

  it('loads preset A and shows the undisturbed superposition', async () => {
    root = document.createElement('div')
    document.body.appendChild(root)
    app = initConsole(root, BASE)

    root.querySelector<HTMLButtonElement>('button[data-preset="a"]')!.click()
    await waitFor(() => app.controller.state.snapshot !== null)

    expect(root.querySelector('#verdict')!.textContent).toBe('paradoxical')
    expect(app.controller.state.snapshot!.dim).toBe(16)
    const probs = displayedProbs(root)
    for (const token of ['1:true', '1:false', '2:true', '2:false']) {
      expect(probs[token]).toBeCloseTo(0.25, 4)
    }
    await expectDisplayedMatchesApi(root, app.controller.state.snapshot!.id)
  })

  it('make-(1)-false collapses and disables the orthogonal hypothesis', async () => {
    root.querySelector<HTMLButtonElement>('[data-measure="1:false"]')!.click()
    await waitFor(() => (app.controller.state.snapshot?.probabilities['1:false'] ?? 0) > 0.999)

    await expectDisplayedMatchesApi(root, app.controller.state.snapshot!.id)
    expect(displayedProbs(root)['1:false']).toBeCloseTo(1, 4)
    expect(root.querySelector<HTMLButtonElement>('[data-measure="1:true"]')!.disabled).toBe(true)
    expect(root.querySelector<HTMLButtonElement>('[data-measure="1:false"]')!.disabled).toBe(false)
  })

  it('charts the four-phase trajectory from the collapsed state', async () => {
    ;(root.querySelector('#t0') as HTMLInputElement).value = '0'
    ;(root.querySelector('#t1') as HTMLInputElement).value = String(TWO_PI)
    ;(root.querySelector('#dt') as HTMLInputElement).value = String(Math.PI / 50)
    root.querySelector<HTMLButtonElement>('#plot')!.click()
    await waitFor(() => app.controller.state.trace !== null)

    const trace = app.controller.state.trace!
    expect(trace.columns).toEqual(['t', 'p_1_true', 'p_1_false', 'p_2_true', 'p_2_false'])
    expect(peakOrder(trace)).toEqual(['p_1_false', 'p_2_true', 'p_1_true', 'p_2_false'])
    expect(root.querySelectorAll('#chart polyline').length).toBe(4)
    expect(root.querySelectorAll('#chart .legend-item').length).toBe(4)
  })

  it('plays to t = 2*pi, matching the API at every step', async () => {
    const id = app.controller.state.snapshot!.id
    let steps = 0
    while (app.controller.state.snapshot!.time < TWO_PI - 1e-9) {
      await app.controller.evolveBy(PLAY_DT)
      await expectDisplayedMatchesApi(root, id)
      steps += 1
    }
    expect(steps).toBe(100)
    // after a full period the collapsed state has come back around
    expect(displayedProbs(root)['1:false']).toBeCloseTo(1, 4)
  })

  it('release restores the superposition', async () => {
    root.querySelector<HTMLButtonElement>('#release')!.click()
    await waitFor(() => app.controller.state.snapshot!.time === 0)

    const probs = displayedProbs(root)
    for (const value of Object.values(probs)) {
      expect(Math.abs(value - 0.25)).toBeLessThanOrEqual(5e-4)
    }
    await expectDisplayedMatchesApi(root, app.controller.state.snapshot!.id)
  })

  it('rejects a bad trace range with a message, mirroring the API', async () => {
    ;(root.querySelector('#dt') as HTMLInputElement).value = '20'
    root.querySelector<HTMLButtonElement>('#plot')!.click()
    await waitFor(() => app.controller.state.traceError !== null)
    expect(root.querySelector('#trace-error')!.textContent).toMatch(/window/)
  })

  it('surfaces parse errors with the offending line', async () => {
    ;(root.querySelector('#dsl') as HTMLTextAreaElement).value =
      '(1) sentence (2) is false\nnot a claim\n'
    root.querySelector<HTMLButtonElement>('#author')!.click()
    await waitFor(() => app.controller.state.error !== null)
    expect(app.controller.state.error).toMatchObject({ code: 'malformed_line', line: 2 })
    expect(root.querySelector('#error')!.textContent).toContain('line 2')
    expect(root.querySelector('#line-marker')!.textContent).toContain('not a claim')
  })
})
