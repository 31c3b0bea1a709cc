#include "binframe/equivalence.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "binframe/error.hpp"

namespace binframe {

namespace {

constexpr int kMaxComplementDim = 24;

void check_equivalence_inputs(const Frame& f, const Frame& h) {
    if (f.dim() != h.dim() || f.size() != h.size() || f.empty()) {
        throw Error(ErrorKind::ShapeMismatch, "frames need equal, nonzero sizes in the same dimension");
    }
    if (!is_parseval(f) || !is_parseval(h)) {
        throw Error(ErrorKind::NotParseval, "equivalence via Grammians is only valid for Parseval frames");
    }
}

// U = synthesis(to) * analysis(from), which maps from_i to to_i whenever the
// Grammians agree. Checked here, since callers rely on it.
BinMatrix map_between(const Frame& from, const Frame& to) {
    BinMatrix u = synthesis_operator(to) * analysis_operator(from);
    if (!is_unitary(u)) {
        throw std::logic_error("constructed map is not unitary");
    }
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (u.apply(from[i]) != to[i]) {
            throw std::logic_error("constructed unitary does not map vector " + std::to_string(i + 1));
        }
    }
    return u;
}

} // namespace

bool is_trivially_redundant(const Frame& f) {
    auto enc = f.encodings();
    std::ranges::sort(enc);
    if (!enc.empty() && enc.front() == 0) {
        return true;
    }
    return std::ranges::adjacent_find(enc) != enc.end();
}

std::optional<BinMatrix> unitary_equivalent(const Frame& f, const Frame& h) {
    check_equivalence_inputs(f, h);
    if (grammian_matrix(f) != grammian_matrix(h)) {
        return std::nullopt;
    }
    return map_between(f, h);
}

std::optional<SwitchingWitness> switching_equivalent(const Frame& f, const Frame& h) {
    check_equivalence_inputs(f, h);
    const Grammian gf = Grammian::of(f);
    const Grammian gh = Grammian::of(h);

    std::vector<std::size_t> perm(f.size());
    if (gf == gh) {
        for (std::size_t j = 0; j < perm.size(); ++j) {
            perm[j] = j;
        }
    } else {
        const CanonicalForm cf = canonical_form(gf);
        const CanonicalForm ch = canonical_form(gh);
        if (cf.key != ch.key) {
            return std::nullopt;
        }
        // Position i of both canonical matrices: f index cf.labeling[i] lines
        // up with h index ch.labeling[i].
        for (std::size_t i = 0; i < perm.size(); ++i) {
            perm[cf.labeling[i]] = ch.labeling[i];
        }
    }

    const Frame aligned = h.reordered(perm);
    if (Grammian::of(aligned) != gf) {
        throw std::logic_error("canonical labelings do not align the Grammians");
    }
    return SwitchingWitness{map_between(aligned, f), std::move(perm)};
}

Frame complement(const Frame& f, bool drop_zero) {
    if (f.dim() < 3) {
        throw Error(ErrorKind::DimensionTooSmall, "complement duality needs n >= 3");
    }
    if (f.dim() > kMaxComplementDim) {
        throw Error(ErrorKind::OutOfRange, "complement in Z_2^" + std::to_string(f.dim()) + " refused");
    }
    auto enc = f.encodings();
    std::ranges::sort(enc);
    if (std::ranges::adjacent_find(enc) != enc.end()) {
        throw Error(ErrorKind::RepeatsPresent, "complement needs a family without repeated vectors");
    }
    std::vector<BinVector> out;
    const Word end = Word{1} << f.dim();
    auto it = enc.begin();
    for (Word x = drop_zero ? 1 : 0; x < end; ++x) {
        while (it != enc.end() && *it < x) {
            ++it;
        }
        if (it != enc.end() && *it == x) {
            continue;
        }
        out.emplace_back(f.dim(), x);
    }
    return Frame(f.dim(), std::move(out));
}

} // namespace binframe
