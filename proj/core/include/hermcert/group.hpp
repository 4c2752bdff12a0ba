#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hermcert/word.hpp"

namespace hermcert {

enum class BackendKind { FreeGroup, FreeProductCyclic, FiniteCayley, RewritingSystem };

/// A group with computable canonical forms. Backends are immutable after
/// construction and safe to share across threads; every construction runs the
/// structural checks documented per subclass and throws std::invalid_argument
/// on failure.
///
/// Canonical Words:
///   FreeGroup          signed letters +-1..+-rank, freely reduced
///   FreeProductCyclic  flattened (factor, exponent) syllable pairs,
///                      adjacent factors distinct, exponents normalized
///   FiniteCayley       a single element index (identity included)
///   RewritingSystem    positive letters, irreducible under the rules
class GroupBackend {
  public:
    virtual ~GroupBackend() = default;

    virtual BackendKind backend_kind() const = 0;
    virtual std::string describe() const = 0;

    /// Product of two canonical words, in canonical form.
    virtual Word multiply(const Word& x, const Word& y) const = 0;
    /// Inverse of a canonical word, in canonical form.
    virtual Word invert(const Word& x) const = 0;
    /// Canonical form of a raw word. Each backend's raw space contains its
    /// canonical encoding, so canonicalize is idempotent: signed letters for
    /// the free and rewriting backends, (factor, exponent) pairs for free
    /// products, element indices for Cayley tables.
    virtual Word canonicalize(const Word& raw) const = 0;
    /// Canonical word of the identity element.
    virtual Word identity_word() const = 0;

    bool is_identity(const Word& w) const { return w == identity_word(); }

    /// Process-unique id used to detect cross-backend element mixing.
    std::uint32_t id() const { return id_; }

  protected:
    GroupBackend();

  private:
    std::uint32_t id_;
};

using BackendPtr = std::shared_ptr<const GroupBackend>;

class FreeGroup final : public GroupBackend {
  public:
    explicit FreeGroup(int rank);

    int rank() const { return rank_; }
    BackendKind backend_kind() const override { return BackendKind::FreeGroup; }
    std::string describe() const override;

    Word multiply(const Word& x, const Word& y) const override;
    Word invert(const Word& x) const override;
    Word canonicalize(const Word& raw) const override;
    Word identity_word() const override { return {}; }

  private:
    void check_letter(std::int32_t v) const;
    int rank_;
};

/// Free product of cyclic groups C_{m_1} * ... * C_{m_r}; order 0 denotes an
/// infinite cyclic factor. Canonical words are exponent-compressed syllables.
class FreeProductCyclic final : public GroupBackend {
  public:
    explicit FreeProductCyclic(std::vector<int> orders);

    const std::vector<int>& orders() const { return orders_; }
    int factor_count() const { return static_cast<int>(orders_.size()); }
    BackendKind backend_kind() const override { return BackendKind::FreeProductCyclic; }
    std::string describe() const override;

    Word multiply(const Word& x, const Word& y) const override;
    Word invert(const Word& x) const override;
    /// Raw words are (factor, exponent) pairs with arbitrary exponents.
    Word canonicalize(const Word& raw) const override;
    Word identity_word() const override { return {}; }

    /// Builds a raw pair word from a signed-letter sequence (letter k is the
    /// generator of factor k, -k its inverse).
    static Word from_letters(const Word& letters);
    static int syllable_count(const Word& w) { return static_cast<int>(w.size() / 2); }
    /// Last `count` syllables (used by the geodesic automaton).
    static Word suffix_syllables(const Word& w, int count);

  private:
    // Exponent e reduced into the canonical range for factor f, 0 meaning the
    // syllable vanishes.
    std::int64_t normalize_exponent(int factor, std::int64_t e) const;
    void append_syllable(Word& out, std::int32_t factor, std::int64_t e) const;
    std::vector<int> orders_;
};

/// Finite group given by its multiplication table. The identity and the
/// inverse table are derived and verified; associativity is verified by the
/// full triple loop for tables of size <= 512.
class FiniteCayley final : public GroupBackend {
  public:
    explicit FiniteCayley(std::vector<std::vector<int>> table);

    int size() const { return n_; }
    int identity_index() const { return identity_; }
    int inverse_index(int i) const { return inverse_[static_cast<std::size_t>(i)]; }
    int product_index(int i, int j) const {
        return table_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
    }
    BackendKind backend_kind() const override { return BackendKind::FiniteCayley; }
    std::string describe() const override;

    Word multiply(const Word& x, const Word& y) const override;
    Word invert(const Word& x) const override;
    Word canonicalize(const Word& raw) const override;
    Word identity_word() const override { return {identity_}; }

    /// Cyclic group Z/n, handy in tests.
    static std::shared_ptr<FiniteCayley> cyclic(int n);

  private:
    int element_of(const Word& w) const;
    int n_ = 0;
    int identity_ = -1;
    std::vector<int> table_;    // row-major n x n
    std::vector<int> inverse_;
};

struct RewriteRule {
    Word lhs;
    Word rhs;
};

/// Confluent rewriting system over a finite alphabet with a designated
/// inverse involution on letters. Rules must be shortlex-reducing; local
/// confluence is verified by critical-pair analysis at construction (no
/// completion is attempted), and each letter must cancel against its inverse.
class RewritingSystem final : public GroupBackend {
  public:
    RewritingSystem(int alphabet_size, std::vector<RewriteRule> rules,
                    std::vector<int> inverse_letter);

    int alphabet_size() const { return alphabet_; }
    int inverse_letter(int letter) const { return inverse_[static_cast<std::size_t>(letter - 1)]; }
    const std::vector<RewriteRule>& rules() const { return rules_; }
    BackendKind backend_kind() const override { return BackendKind::RewritingSystem; }
    std::string describe() const override;

    Word multiply(const Word& x, const Word& y) const override;
    Word invert(const Word& x) const override;
    Word canonicalize(const Word& raw) const override;
    Word identity_word() const override { return {}; }

  private:
    Word reduce(Word w) const;
    void check_rules() const;
    void check_local_confluence() const;
    void check_inverses() const;
    int alphabet_;
    std::vector<RewriteRule> rules_;
    std::vector<int> inverse_;
};

/// An element paired with the id of the backend it lives in.
struct GroupElement {
    std::uint32_t backend_id = 0;
    Word word;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement make_element(const GroupBackend& g, const Word& raw);
GroupElement multiply(const GroupBackend& g, const GroupElement& x, const GroupElement& y);
GroupElement invert(const GroupBackend& g, const GroupElement& x);
GroupElement canonicalize(const GroupBackend& g, const Word& raw);

/// Finite deduplicated generating set. Symmetry (closure under inversion) is
/// verified, never assumed; sets containing the identity are accepted but
/// flagged since sphere semantics degenerate.
struct GeneratingSet {
    BackendPtr backend;
    std::vector<Word> elements;
    bool symmetric = false;
    bool contains_identity = false;

    int size() const { return static_cast<int>(elements.size()); }

    static GeneratingSet from_words(BackendPtr backend, const std::vector<Word>& raw_words);
};

bool validate_symmetric(const GroupBackend& g, const GeneratingSet& s);

}  // namespace hermcert
