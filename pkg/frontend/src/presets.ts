// The four stock sentence systems, loadable with one click.

export interface Preset {
  key: string
  label: string
  dsl: string
}

export const PRESETS: Preset[] = [
  {
    key: 'single',
    label: 'Single Liar',
    dsl: '(1) sentence (1) is false',
  },
  {
    key: 'a',
    label: 'Double Liar A',
    dsl: '(1) sentence (2) is false\n(2) sentence (1) is true',
  },
  {
    key: 'b',
    label: 'Double Liar B',
    dsl: '(1) sentence (2) is true\n(2) sentence (1) is true',
  },
  {
    key: 'c',
    label: 'Double Liar C',
    dsl: '(1) sentence (2) is false\n(2) sentence (1) is false',
  },
]
