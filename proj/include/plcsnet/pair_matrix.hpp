#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plcsnet/plcs.hpp"

namespace plcsnet {

enum class Channel { Gamma, Beta, Ud };

std::string_view channel_name(Channel c);

/// One unordered pair. An absent value on a computed channel means the pair
/// is degenerate on that channel; `note` carries the reason. `identical` is
/// set by every matrix builder when the two series are equal element-wise.
struct PairResult {
    std::optional<FitResult> fit;
    std::optional<double> ud;
    bool identical = false;
    std::string note;
};

/// Symmetric pair results over the entities of a panel. Only i < j is stored
/// (packed upper triangle); the diagonal has no cell.
class PairMatrix {
public:
    PairMatrix() = default;
    explicit PairMatrix(std::vector<std::string> entities);

    const std::vector<std::string>& entities() const { return entities_; }
    std::size_t size() const { return entities_.size(); }
    std::size_t pair_count() const { return cells_.size(); }

    /// Packed index of the unordered pair {i, j}; ContractError if i == j.
    std::size_t pair_index(std::size_t i, std::size_t j) const;
    /// Inverse of pair_index: (i, j) with i < j.
    std::pair<std::size_t, std::size_t> pair_at(std::size_t index) const;

    PairResult& cell(std::size_t i, std::size_t j) { return cells_[pair_index(i, j)]; }
    const PairResult& cell(std::size_t i, std::size_t j) const { return cells_[pair_index(i, j)]; }
    PairResult& cell_at(std::size_t index) { return cells_.at(index); }
    const PairResult& cell_at(std::size_t index) const { return cells_.at(index); }

    bool has_channel(Channel c) const;
    void mark_channel(Channel c);

    /// Channel value, nullopt when the pair is degenerate there.
    /// ContractError if the channel was never computed.
    std::optional<double> value(std::size_t i, std::size_t j, Channel c) const;

    /// Pairs (i < j) with no value on the channel.
    std::vector<std::pair<std::size_t, std::size_t>> degenerate_pairs(Channel c) const;

    /// Combines the channels of two matrices over the same entities.
    static PairMatrix merge(const PairMatrix& plcs, const PairMatrix& ud);

private:
    std::vector<std::string> entities_;
    std::vector<PairResult> cells_;
    bool has_plcs_ = false;
    bool has_ud_ = false;
};

namespace detail {

/// Runs fn(index) for index in [0, count) on up to `threads` workers
/// (0 = hardware concurrency). Each index is visited exactly once. The first
/// exception thrown by any worker is rethrown after all workers join.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn);

}  // namespace detail

}  // namespace plcsnet

#include "plcsnet/detail/parallel_for.hpp"
