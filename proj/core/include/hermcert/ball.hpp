#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hermcert/group.hpp"
#include "hermcert/word.hpp"

namespace hermcert {

struct BallOptions {
    int n_max = 10;
    int store_limit = 64;
    std::size_t memory_budget_bytes = std::size_t{2} << 30;  // 2 GiB
};

/// Enumerated word-length layers of <S>. Layer n holds the elements of
/// S-length exactly n (the literal set difference B_n \ B_{n-1}, where B_n is
/// the ball of all products of at most n generators, B_0 = {e}).
///
/// ball_sizes()[n]   = |B_n|  (nondecreasing; index 0 is the identity ball)
/// sphere_sizes()[n] = |B_n \ B_{n-1}|
///
/// Elements are stored varint-packed in a single arena; iteration order is
/// the BFS discovery order and is deterministic for a fixed generating set.
class BallTable {
  public:
    int completed_radius() const { return completed_; }
    bool truncated() const { return truncated_; }
    bool generators_contain_identity() const { return gens_contain_identity_; }
    int store_limit() const { return store_limit_; }
    std::size_t memory_used_bytes() const;

    const std::vector<std::uint64_t>& ball_sizes() const { return ball_sizes_; }
    const std::vector<std::uint64_t>& sphere_sizes() const { return sphere_sizes_; }

    /// Decoded elements of sphere n (n <= completed_radius()).
    std::vector<Word> sphere_elements(int n) const;
    /// S-length of a canonical word if it was reached, nullopt otherwise.
    std::optional<int> length_of(const Word& w) const;

    const BackendPtr& backend() const { return backend_; }
    const GeneratingSet& generators() const { return generators_; }

  private:
    friend BallTable enumerate_balls(const GeneratingSet&, const BallOptions&);

    struct Slot {
        std::uint64_t hash = 0;
        std::uint64_t offset = kEmpty;
        std::uint32_t length = 0;
        static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
    };

    bool lookup(const std::uint8_t* bytes, std::size_t len, std::uint64_t hash,
                std::uint64_t* offset_out) const;
    void insert_slot(std::uint64_t hash, std::uint64_t offset, std::uint32_t length);
    void grow_slots();

    BackendPtr backend_;
    GeneratingSet generators_;
    std::vector<std::uint8_t> arena_;
    std::vector<Slot> slots_;
    std::size_t entry_count_ = 0;
    std::vector<std::uint64_t> layer_end_offset_;  // arena offset where layer n ends
    std::vector<std::uint64_t> ball_sizes_;
    std::vector<std::uint64_t> sphere_sizes_;
    int completed_ = 0;
    int store_limit_ = 0;
    bool truncated_ = false;
    bool gens_contain_identity_ = false;
};

/// BFS enumeration of the layers of <S> up to options.n_max. Stops early,
/// flagging the table truncated, when the memory budget would be exceeded;
/// counts are exact for every completed radius.
BallTable enumerate_balls(const GeneratingSet& s, const BallOptions& options);

struct SubmultiplicativityReport {
    bool ok = true;
    int pairs_checked = 0;
    std::string violation;  // empty when ok
};

/// Verifies |B_{n+k}| <= |B_n||B_k| and |sphere_{n+k}| <= |sphere_n||sphere_k|
/// for every stored pair. A violation indicates an enumeration bug and is
/// reported as such.
SubmultiplicativityReport check_submultiplicative(const BallTable& table);

struct AgreementReport {
    double ball_root = 0;
    double sphere_root = 0;
    double difference = 0;
    double tolerance = 0;
    bool within = false;
};

/// Advisory comparison of the deepest ball root against the deepest sphere
/// root; finite-depth disagreement is reported, not treated as an error.
AgreementReport omega_sigma_agreement(const BallTable& table, double tolerance);

}  // namespace hermcert
