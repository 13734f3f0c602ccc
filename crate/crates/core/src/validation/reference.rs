//! Susceptibility components at finite acceleration, computed at 40 digits
//! by `scripts/tensor_reference.py` from an independent transcription of the
//! closed forms. The distance column is `L` for the perpendicular cases (the
//! mirror case is evaluated at `L + 2z`) and `D` for the parallel case.

#![allow(clippy::excessive_precision)]

use crate::em::Axis::{self, X, Y, Z};
use crate::em::TensorCase::{self, ParBoundary, PerpBoundary, PerpFree};

#[derive(Debug, Clone, Copy)]
pub(crate) struct ReferenceValue {
    pub case: TensorCase,
    pub a: f64,
    pub d: f64,
    pub z: f64,
    pub omega: f64,
    pub function: char,
    pub i: Axis,
    pub j: Axis,
    pub value: f64,
}

#[allow(clippy::too_many_arguments)]
const fn r(case: TensorCase, a: f64, d: f64, z: f64, omega: f64, function: char, i: Axis, j: Axis, value: f64) -> ReferenceValue {
    ReferenceValue { case, a, d, z, omega, function, i, j, value }
}

#[rustfmt::skip]
pub(crate) const TABLE: &[ReferenceValue] = &[
    r(PerpBoundary, 0.8, 1.0, 0.35, 1.3, 'f', X, X, 0.59937283374599495826),
    r(PerpBoundary, 0.8, 1.0, 0.35, 1.3, 'h', X, X, 0.34333535795243629593),
    r(PerpBoundary, 0.8, 1.0, 0.35, 1.3, 'f', Y, Y, 0.59205893710296578407),
    r(PerpBoundary, 0.8, 1.0, 0.35, 1.3, 'h', Y, Y, 0.70696788814455952431),
    r(PerpBoundary, 0.8, 1.0, 0.35, 1.3, 'f', Z, Z, 0.60787618762854790818),
    r(PerpBoundary, 0.8, 1.0, 0.35, 1.3, 'h', Z, Z, -0.079434642547748495542),
    r(PerpBoundary, 0.8, 1.0, 0.35, 1.3, 'f', X, Z, -0.010755730357395844394),
    r(PerpBoundary, 0.8, 1.0, 0.35, 1.3, 'h', X, Z, 0.5347537208707694535),
    r(PerpFree, 0.8, 1.0, 0.35, 1.3, 'f', X, X, 1.5844233055885850178),
    r(PerpFree, 0.8, 1.0, 0.35, 1.3, 'h', X, X, 0.37122507409056890002),
    r(PerpFree, 0.8, 1.0, 0.35, 1.3, 'f', Y, Y, 1.4793103448275862069),
    r(PerpFree, 0.8, 1.0, 0.35, 1.3, 'h', Y, Y, 0.76871466717776124727),
    r(PerpFree, 0.8, 1.0, 0.35, 1.3, 'f', Z, Z, -2.1362663495838287753),
    r(PerpFree, 0.8, 1.0, 0.35, 1.3, 'h', Z, Z, 1.715595289617190923),
    r(PerpFree, 0.8, 1.0, 0.35, 1.3, 'f', X, Z, 0.26278240190249702735),
    r(PerpFree, 0.8, 1.0, 0.35, 1.3, 'h', X, Z, -0.99372398271798086812),
    r(ParBoundary, 0.8, 1.0, 0.35, 1.3, 'f', X, X, 1.111401155094281435),
    r(ParBoundary, 0.8, 1.0, 0.35, 1.3, 'h', X, X, 0.45561987045906329838),
    r(ParBoundary, 0.8, 1.0, 0.35, 1.3, 'f', Y, Y, -0.555888142871773353),
    r(ParBoundary, 0.8, 1.0, 0.35, 1.3, 'h', Y, Y, 0.80735219343491809964),
    r(ParBoundary, 0.8, 1.0, 0.35, 1.3, 'f', Z, Z, -0.2582401676745333618),
    r(ParBoundary, 0.8, 1.0, 0.35, 1.3, 'h', Z, Z, -0.82663546406693779852),
    r(ParBoundary, 0.8, 1.0, 0.35, 1.3, 'f', X, Y, -0.11905919007889599648),
    r(ParBoundary, 0.8, 1.0, 0.35, 1.3, 'h', X, Y, 0.65359506300074235926),
    r(ParBoundary, 0.8, 1.0, 0.35, 1.3, 'f', X, Z, -0.083341433055227197535),
    r(ParBoundary, 0.8, 1.0, 0.35, 1.3, 'h', X, Z, 0.45751654410051965148),
    r(ParBoundary, 0.8, 1.0, 0.35, 1.3, 'f', Y, Z, -1.1174310144753229419),
    r(ParBoundary, 0.8, 1.0, 0.35, 1.3, 'h', Y, Z, -0.026467234200811351405),
    r(PerpBoundary, 2.5, 0.6, 0.45, 0.7, 'f', X, X, 0.22981419177345950253),
    r(PerpBoundary, 2.5, 0.6, 0.45, 0.7, 'h', X, X, -0.35893719604887701393),
    r(PerpBoundary, 2.5, 0.6, 0.45, 0.7, 'f', Y, Y, 0.55332564398308342945),
    r(PerpBoundary, 2.5, 0.6, 0.45, 0.7, 'h', Y, Y, 0.12284747193764087719),
    r(PerpBoundary, 2.5, 0.6, 0.45, 0.7, 'f', Z, Z, 0.46130460868790151246),
    r(PerpBoundary, 2.5, 0.6, 0.45, 0.7, 'h', Z, Z, -0.014193500289635322952),
    r(PerpBoundary, 2.5, 0.6, 0.45, 0.7, 'f', X, Z, 0.17253944117846609436),
    r(PerpBoundary, 2.5, 0.6, 0.45, 0.7, 'h', X, Z, 0.25695182292614287526),
    r(PerpFree, 2.5, 0.6, 0.45, 0.7, 'f', X, X, 2.5884444444444444444),
    r(PerpFree, 2.5, 0.6, 0.45, 0.7, 'h', X, X, -4.7255703703703703704),
    r(PerpFree, 2.5, 0.6, 0.45, 0.7, 'f', Y, Y, 2.6444444444444444444),
    r(PerpFree, 2.5, 0.6, 0.45, 0.7, 'h', Y, Y, -1.717037037037037037),
    r(PerpFree, 2.5, 0.6, 0.45, 0.7, 'f', Z, Z, -2.5448888888888888889),
    r(PerpFree, 2.5, 0.6, 0.45, 0.7, 'h', Z, Z, 7.0655407407407407407),
    r(PerpFree, 2.5, 0.6, 0.45, 0.7, 'f', X, Z, -0.074666666666666666667),
    r(PerpFree, 2.5, 0.6, 0.45, 0.7, 'h', X, Z, -4.0113777777777777778),
    r(ParBoundary, 2.5, 0.6, 0.45, 0.7, 'f', X, X, 0.62179415434810569269),
    r(ParBoundary, 2.5, 0.6, 0.45, 0.7, 'h', X, X, -0.96360559700025400168),
    r(ParBoundary, 2.5, 0.6, 0.45, 0.7, 'f', Y, Y, 0.43999454860868408403),
    r(ParBoundary, 2.5, 0.6, 0.45, 0.7, 'h', Y, Y, 0.21926506483438876005),
    r(ParBoundary, 2.5, 0.6, 0.45, 0.7, 'f', Z, Z, 0.24130092785834955817),
    r(ParBoundary, 2.5, 0.6, 0.45, 0.7, 'h', Z, Z, -0.36430488163682732663),
    r(ParBoundary, 2.5, 0.6, 0.45, 0.7, 'f', X, Y, 0.1490202155627508944),
    r(ParBoundary, 2.5, 0.6, 0.45, 0.7, 'h', X, Y, 0.43767745985341206501),
    r(ParBoundary, 2.5, 0.6, 0.45, 0.7, 'f', X, Z, 0.22353032334412634159),
    r(ParBoundary, 2.5, 0.6, 0.45, 0.7, 'h', X, Z, 0.65651618978011809751),
    r(ParBoundary, 2.5, 0.6, 0.45, 0.7, 'f', Y, Z, -0.81755457176044037063),
    r(ParBoundary, 2.5, 0.6, 0.45, 0.7, 'h', Y, Z, 0.1740477801629262799),
    r(PerpBoundary, 0.3, 2.0, 1.5, 2.2, 'f', X, X, 0.1171456),
    r(PerpBoundary, 0.3, 2.0, 1.5, 2.2, 'h', X, X, 0.48672768),
    r(PerpBoundary, 0.3, 2.0, 1.5, 2.2, 'f', Y, Y, 0.11968),
    r(PerpBoundary, 0.3, 2.0, 1.5, 2.2, 'h', Y, Y, 0.770304),
    r(PerpBoundary, 0.3, 2.0, 1.5, 2.2, 'f', Z, Z, 0.1151744),
    r(PerpBoundary, 0.3, 2.0, 1.5, 2.2, 'h', Z, Z, 0.26616832),
    r(PerpBoundary, 0.3, 2.0, 1.5, 2.2, 'f', X, Z, 0.0033792),
    r(PerpBoundary, 0.3, 2.0, 1.5, 2.2, 'h', X, Z, 0.37810176),
    r(PerpFree, 0.3, 2.0, 1.5, 2.2, 'f', X, X, 0.62957663496338692029),
    r(PerpFree, 0.3, 2.0, 1.5, 2.2, 'h', X, X, 2.0043730339458695816),
    r(PerpFree, 0.3, 2.0, 1.5, 2.2, 'f', Y, Y, 0.59541284403669724771),
    r(PerpFree, 0.3, 2.0, 1.5, 2.2, 'h', Y, Y, 2.208097146333678183),
    r(PerpFree, 0.3, 2.0, 1.5, 2.2, 'f', Z, Z, -0.975010520999915832),
    r(PerpFree, 0.3, 2.0, 1.5, 2.2, 'h', Z, Z, 0.055504102419750720546),
    r(PerpFree, 0.3, 2.0, 1.5, 2.2, 'f', X, Z, 0.11387930308896557529),
    r(PerpFree, 0.3, 2.0, 1.5, 2.2, 'h', X, Z, -0.67908037462602867105),
    r(ParBoundary, 0.3, 2.0, 1.5, 2.2, 'f', X, X, 0.21982544390873951761),
    r(ParBoundary, 0.3, 2.0, 1.5, 2.2, 'h', X, X, 0.89189145154736559121),
    r(ParBoundary, 0.3, 2.0, 1.5, 2.2, 'f', Y, Y, 0.066883216028321714849),
    r(ParBoundary, 0.3, 2.0, 1.5, 2.2, 'h', Y, Y, 0.73714065710949398122),
    r(ParBoundary, 0.3, 2.0, 1.5, 2.2, 'f', Z, Z, 0.10892356590026959495),
    r(ParBoundary, 0.3, 2.0, 1.5, 2.2, 'h', Z, Z, -0.20077628287889847641),
    r(ParBoundary, 0.3, 2.0, 1.5, 2.2, 'f', X, Y, -0.012612104961584364029),
    r(ParBoundary, 0.3, 2.0, 1.5, 2.2, 'h', X, Y, 0.28137508199651773729),
    r(ParBoundary, 0.3, 2.0, 1.5, 2.2, 'f', X, Z, -0.018918157442376546043),
    r(ParBoundary, 0.3, 2.0, 1.5, 2.2, 'h', X, Z, 0.42206262299477660593),
    r(ParBoundary, 0.3, 2.0, 1.5, 2.2, 'f', Y, Z, -0.21096813831430957175),
    r(ParBoundary, 0.3, 2.0, 1.5, 2.2, 'h', Y, Z, -0.64363724907671460577),
];
