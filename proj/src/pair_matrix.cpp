#include "plcsnet/pair_matrix.hpp"

#include "plcsnet/error.hpp"

namespace plcsnet {

std::string_view channel_name(Channel c) {
    switch (c) {
        case Channel::Gamma: return "gamma";
        case Channel::Beta: return "beta";
        case Channel::Ud: return "ud";
    }
    return "unknown";
}

PairMatrix::PairMatrix(std::vector<std::string> entities) : entities_(std::move(entities)) {
    if (entities_.size() < 2) throw ContractError("pair matrix needs at least 2 entities");
    const std::size_t n = entities_.size();
    cells_.resize(n * (n - 1) / 2);
}

std::size_t PairMatrix::pair_index(std::size_t i, std::size_t j) const {
    const std::size_t n = entities_.size();
    if (i == j) throw ContractError("pair matrix has no diagonal cell (" + entities_.at(i) + ")");
    if (i >= n || j >= n) throw ContractError("pair index out of range");
    if (i > j) std::swap(i, j);
    // Rows 0..i-1 hold (n-1) + (n-2) + ... + (n-i) cells.
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> PairMatrix::pair_at(std::size_t index) const {
    if (index >= cells_.size()) throw ContractError("pair index out of range");
    const std::size_t n = entities_.size();
    std::size_t i = 0;
    std::size_t row_len = n - 1;
    while (index >= row_len) {
        index -= row_len;
        ++i;
        --row_len;
    }
    return {i, i + 1 + index};
}

bool PairMatrix::has_channel(Channel c) const {
    return c == Channel::Ud ? has_ud_ : has_plcs_;
}

void PairMatrix::mark_channel(Channel c) {
    (c == Channel::Ud ? has_ud_ : has_plcs_) = true;
}

std::optional<double> PairMatrix::value(std::size_t i, std::size_t j, Channel c) const {
    if (!has_channel(c)) {
        throw ContractError("channel " + std::string(channel_name(c)) + " was not computed");
    }
    const PairResult& r = cell(i, j);
    switch (c) {
        case Channel::Gamma: return r.fit ? std::optional(r.fit->gamma) : std::nullopt;
        case Channel::Beta: return r.fit ? std::optional(r.fit->beta) : std::nullopt;
        case Channel::Ud: return r.ud;
    }
    return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>> PairMatrix::degenerate_pairs(Channel c) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        const auto [i, j] = pair_at(k);
        if (!value(i, j, c)) out.emplace_back(i, j);
    }
    return out;
}

PairMatrix PairMatrix::merge(const PairMatrix& plcs, const PairMatrix& ud) {
    if (plcs.entities_ != ud.entities_) throw ContractError("cannot merge matrices over different entities");
    PairMatrix out = plcs;
    out.has_ud_ = out.has_ud_ || ud.has_ud_;
    out.has_plcs_ = out.has_plcs_ || ud.has_plcs_;
    for (std::size_t k = 0; k < out.cells_.size(); ++k) {
        PairResult& dst = out.cells_[k];
        const PairResult& src = ud.cells_[k];
        if (ud.has_ud_) dst.ud = src.ud;
        dst.identical = dst.identical || src.identical;
        if (!plcs.has_plcs_ && ud.has_plcs_) dst.fit = src.fit;
        if (!src.note.empty() && src.note != dst.note) {
            dst.note = dst.note.empty() ? src.note : dst.note + "; " + src.note;
        }
    }
    return out;
}

}  // namespace plcsnet
