// Noise decay and the histogram view model.
//
// The service reports exact integer sector lengths A_k; the slider
// applies n single-qubit depolarizing channels client-side, scaling
// sector k by (1-p)^(2k). Bars are blue for even k and red for odd k.
export const EVEN_BAR_COLOR = "#3572b0";
export const ODD_BAR_COLOR = "#c0392b";
export function decayedValues(A, p) {
    if (!(p >= 0 && p <= 1))
        throw new Error(`noise probability ${p} outside [0,1]`);
    const factor = (1 - p) * (1 - p);
    const values = [];
    let scale = 1;
    for (const a of A) {
        values.push(a * scale);
        scale *= factor;
    }
    return values;
}
export function histogramBars(A, p) {
    const values = decayedValues(A, p);
    const top = Math.max(...values, 0);
    return values.map((value, k) => ({
        k,
        value,
        height: top > 0 ? value / top : 0,
        color: k % 2 === 0 ? EVEN_BAR_COLOR : ODD_BAR_COLOR,
    }));
}
/** Bars a reader would actually see: positive height. */
export function visibleBars(bars) {
    return bars.filter((bar) => bar.value > 0);
}
