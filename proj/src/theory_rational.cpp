#include "uusc/theory/rational.hpp"

namespace uusc::theory {

const Rational& HarmonicTable::h(int m) {
    while (static_cast<int>(values_.size()) <= m) {
        int next = static_cast<int>(values_.size());
        values_.push_back(values_.back() + Rational(1, next));
    }
    return values_[static_cast<size_t>(m)];
}

Rational harmonic(int m) {
    Rational h(0);
    for (int i = 1; i <= m; ++i) h += Rational(1, i);
    return h;
}

} // namespace uusc::theory
