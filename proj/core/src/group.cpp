#include "hermcert/group.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace hermcert {

namespace {

std::atomic<std::uint32_t> next_backend_id{1};

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::string word_debug(const Word& w) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << "]";
    return os.str();
}

// true if a < b in shortlex order.
bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

GroupBackend::GroupBackend() : id_(next_backend_id.fetch_add(1)) {}

// ---------------------------------------------------------------------------
// FreeGroup

FreeGroup::FreeGroup(int rank) : rank_(rank) {
    if (rank < 1) fail("FreeGroup rank must be >= 1");
}

std::string FreeGroup::describe() const { return "free:" + std::to_string(rank_); }

void FreeGroup::check_letter(std::int32_t v) const {
    if (v == 0 || v > rank_ || v < -rank_)
        fail("free group letter out of range: " + std::to_string(v));
}

Word FreeGroup::canonicalize(const Word& raw) const {
    Word out;
    out.reserve(raw.size());
    for (std::int32_t v : raw) {
        check_letter(v);
        if (!out.empty() && out.back() == -v)
            out.pop_back();
        else
            out.push_back(v);
    }
    return out;
}

Word FreeGroup::multiply(const Word& x, const Word& y) const {
    Word out = x;
    out.reserve(x.size() + y.size());
    for (std::int32_t v : y) {
        check_letter(v);
        if (!out.empty() && out.back() == -v)
            out.pop_back();
        else
            out.push_back(v);
    }
    return out;
}

Word FreeGroup::invert(const Word& x) const {
    Word out;
    out.reserve(x.size());
    for (auto it = x.rbegin(); it != x.rend(); ++it) out.push_back(-*it);
    return out;
}

// ---------------------------------------------------------------------------
// FreeProductCyclic

FreeProductCyclic::FreeProductCyclic(std::vector<int> orders) : orders_(std::move(orders)) {
    if (orders_.empty()) fail("FreeProductCyclic needs at least one factor");
    for (int m : orders_)
        if (m < 0) fail("FreeProductCyclic orders must be nonnegative (0 = infinite)");
}

std::string FreeProductCyclic::describe() const {
    std::string s = "fpc:";
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(orders_[i]);
    }
    return s;
}

std::int64_t FreeProductCyclic::normalize_exponent(int factor, std::int64_t e) const {
    int m = orders_[static_cast<std::size_t>(factor - 1)];
    if (m == 0) return e;
    std::int64_t r = e % m;
    return r < 0 ? r + m : r;
}

void FreeProductCyclic::append_syllable(Word& out, std::int32_t factor, std::int64_t e) const {
    if (factor < 1 || factor > factor_count())
        fail("free product factor out of range: " + std::to_string(factor));
    while (true) {
        if (!out.empty() && out[out.size() - 2] == factor) {
            e += out.back();
            out.pop_back();
            out.pop_back();
            continue;
        }
        std::int64_t norm = normalize_exponent(factor, e);
        if (norm != 0) {
            if (norm > std::numeric_limits<std::int32_t>::max() ||
                norm < std::numeric_limits<std::int32_t>::min())
                fail("free product exponent overflow");
            out.push_back(factor);
            out.push_back(static_cast<std::int32_t>(norm));
        }
        return;
    }
}

Word FreeProductCyclic::canonicalize(const Word& raw) const {
    // Raw words are (factor, exponent) pairs, the same shape as canonical
    // words, so canonicalize is idempotent. from_letters builds pairs from a
    // plain signed-letter sequence.
    if (raw.size() % 2 != 0)
        fail("free product raw word must be (factor, exponent) pairs");
    Word out;
    out.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); i += 2) append_syllable(out, raw[i], raw[i + 1]);
    return out;
}

Word FreeProductCyclic::from_letters(const Word& letters) {
    Word pairs;
    pairs.reserve(letters.size() * 2);
    for (std::int32_t v : letters) {
        if (v == 0) throw std::invalid_argument("free product letter may not be 0");
        pairs.push_back(v > 0 ? v : -v);
        pairs.push_back(v > 0 ? 1 : -1);
    }
    return pairs;
}

Word FreeProductCyclic::multiply(const Word& x, const Word& y) const {
    if (y.size() % 2 != 0 || x.size() % 2 != 0) fail("malformed free product word");
    Word out = x;
    out.reserve(x.size() + y.size());
    for (std::size_t i = 0; i < y.size(); i += 2) append_syllable(out, y[i], y[i + 1]);
    return out;
}

Word FreeProductCyclic::invert(const Word& x) const {
    if (x.size() % 2 != 0) fail("malformed free product word");
    Word out;
    out.reserve(x.size());
    for (std::size_t i = x.size(); i >= 2; i -= 2) {
        std::int32_t f = x[i - 2];
        std::int64_t e = normalize_exponent(f, -static_cast<std::int64_t>(x[i - 1]));
        out.push_back(f);
        out.push_back(static_cast<std::int32_t>(e));
    }
    return out;
}

Word FreeProductCyclic::suffix_syllables(const Word& w, int count) {
    int total = syllable_count(w);
    if (count >= total) return w;
    return Word(w.end() - 2 * static_cast<std::ptrdiff_t>(count), w.end());
}

// ---------------------------------------------------------------------------
// FiniteCayley

FiniteCayley::FiniteCayley(std::vector<std::vector<int>> table) {
    n_ = static_cast<int>(table.size());
    if (n_ < 1) fail("Cayley table must be nonempty");
    table_.resize(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i) {
        if (static_cast<int>(table[static_cast<std::size_t>(i)].size()) != n_)
            fail("Cayley table row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < n_; ++j) {
            int v = table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (v < 0 || v >= n_)
                fail("Cayley table entry out of range at (" + std::to_string(i) + "," +
                     std::to_string(j) + ")");
            table_[static_cast<std::size_t>(i) * n_ + j] = v;
        }
    }

    for (int e = 0; e < n_; ++e) {
        bool ok = true;
        for (int j = 0; j < n_ && ok; ++j)
            ok = product_index(e, j) == j && product_index(j, e) == j;
        if (ok) {
            identity_ = e;
            break;
        }
    }
    if (identity_ < 0) fail("Cayley table has no identity element");

    inverse_.assign(static_cast<std::size_t>(n_), -1);
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (product_index(i, j) == identity_) {
                if (product_index(j, i) != identity_)
                    fail("Cayley table: one-sided inverse at " + std::to_string(i));
                inverse_[static_cast<std::size_t>(i)] = j;
                break;
            }
        }
        if (inverse_[static_cast<std::size_t>(i)] < 0)
            fail("Cayley table: element " + std::to_string(i) + " has no inverse");
    }

    // Full associativity check is cubic; run it only for tables that stay
    // cheap (<= 512 elements, ~1.3e8 lookups).
    if (n_ <= 512) {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                for (int k = 0; k < n_; ++k)
                    if (product_index(product_index(i, j), k) !=
                        product_index(i, product_index(j, k)))
                        fail("Cayley table is not associative at (" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) + ")");
    }
}

std::string FiniteCayley::describe() const { return "cayley:" + std::to_string(n_); }

int FiniteCayley::element_of(const Word& w) const {
    if (w.size() != 1 || w[0] < 0 || w[0] >= n_)
        fail("malformed Cayley word " + word_debug(w));
    return w[0];
}

Word FiniteCayley::multiply(const Word& x, const Word& y) const {
    return {product_index(element_of(x), element_of(y))};
}

Word FiniteCayley::invert(const Word& x) const { return {inverse_index(element_of(x))}; }

Word FiniteCayley::canonicalize(const Word& raw) const {
    // Raw words are sequences of 0-based element indices (canonical words are
    // the length-1 case, so canonicalize is idempotent); inverses are taken
    // with invert().
    int acc = identity_;
    for (std::int32_t v : raw) {
        if (v < 0 || v >= n_) fail("Cayley element index out of range: " + std::to_string(v));
        acc = product_index(acc, v);
    }
    return {acc};
}

std::shared_ptr<FiniteCayley> FiniteCayley::cyclic(int n) {
    if (n < 1) fail("cyclic group order must be >= 1");
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
    return std::make_shared<FiniteCayley>(std::move(t));
}

// ---------------------------------------------------------------------------
// RewritingSystem

RewritingSystem::RewritingSystem(int alphabet_size, std::vector<RewriteRule> rules,
                                 std::vector<int> inverse_letter)
    : alphabet_(alphabet_size), rules_(std::move(rules)), inverse_(std::move(inverse_letter)) {
    if (alphabet_ < 1) fail("rewriting system needs a nonempty alphabet");
    if (static_cast<int>(inverse_.size()) != alphabet_)
        fail("inverse map must cover the whole alphabet");
    check_rules();
    check_local_confluence();
    check_inverses();
}

std::string RewritingSystem::describe() const {
    return "rws:" + std::to_string(alphabet_) + "-letter/" + std::to_string(rules_.size()) +
           "-rule";
}

void RewritingSystem::check_rules() const {
    for (std::size_t r = 0; r < rules_.size(); ++r) {
        const auto& [lhs, rhs] = rules_[r];
        if (lhs.empty()) fail("rule " + std::to_string(r) + " has empty left side");
        for (std::int32_t v : lhs)
            if (v < 1 || v > alphabet_)
                fail("rule " + std::to_string(r) + " left side letter out of range");
        for (std::int32_t v : rhs)
            if (v < 1 || v > alphabet_)
                fail("rule " + std::to_string(r) + " right side letter out of range");
        if (!shortlex_less(rhs, lhs))
            fail("rule " + std::to_string(r) +
                 " is not shortlex-reducing (right side must be shorter, or equal length and "
                 "lexicographically smaller)");
    }
}

Word RewritingSystem::reduce(Word w) const {
    // Leftmost rewriting; shortlex-reducing rules guarantee termination.
    std::size_t pos = 0;
    while (pos < w.size()) {
        bool rewrote = false;
        for (const auto& [lhs, rhs] : rules_) {
            if (pos + lhs.size() > w.size()) continue;
            if (!std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos)))
                continue;
            Word next;
            next.reserve(w.size() - lhs.size() + rhs.size());
            next.insert(next.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
            next.insert(next.end(), rhs.begin(), rhs.end());
            next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + lhs.size()),
                        w.end());
            w = std::move(next);
            // A new redex can only appear within max-lhs reach of the splice.
            std::size_t back = 0;
            for (const auto& rule : rules_) back = std::max(back, rule.lhs.size());
            pos = pos > back ? pos - back : 0;
            rewrote = true;
            break;
        }
        if (!rewrote) ++pos;
    }
    return w;
}

void RewritingSystem::check_local_confluence() const {
    auto check_pair = [&](const Word& peak, const Word& via1, const Word& via2, std::size_t i,
                          std::size_t j) {
        Word n1 = reduce(via1);
        Word n2 = reduce(via2);
        if (n1 != n2)
            fail("rewriting system is not locally confluent: critical pair of rules " +
                 std::to_string(i) + " and " + std::to_string(j) + " at overlap " +
                 word_debug(peak) + " resolves to " + word_debug(n1) + " vs " + word_debug(n2));
    };

    for (std::size_t i = 0; i < rules_.size(); ++i) {
        const Word& li = rules_[i].lhs;
        const Word& ri = rules_[i].rhs;
        for (std::size_t j = 0; j < rules_.size(); ++j) {
            const Word& lj = rules_[j].lhs;
            const Word& rj = rules_[j].rhs;

            // Overlaps: proper suffix of li equals prefix of lj.
            std::size_t kmax = std::min(li.size(), lj.size());
            for (std::size_t k = 1; k <= kmax; ++k) {
                if (k == li.size() && k == lj.size()) continue;  // identical-word overlap
                if (!std::equal(li.end() - static_cast<std::ptrdiff_t>(k), li.end(), lj.begin()))
                    continue;
                Word peak(li.begin(), li.end());
                peak.insert(peak.end(), lj.begin() + static_cast<std::ptrdiff_t>(k), lj.end());
                Word via1 = ri;
                via1.insert(via1.end(), lj.begin() + static_cast<std::ptrdiff_t>(k), lj.end());
                Word via2(li.begin(), li.end() - static_cast<std::ptrdiff_t>(k));
                via2.insert(via2.end(), rj.begin(), rj.end());
                check_pair(peak, via1, via2, i, j);
            }

            // Containment: lj strictly inside li.
            if (lj.size() < li.size()) {
                for (std::size_t q = 0; q + lj.size() <= li.size(); ++q) {
                    if (!std::equal(lj.begin(), lj.end(),
                                    li.begin() + static_cast<std::ptrdiff_t>(q)))
                        continue;
                    Word via2(li.begin(), li.begin() + static_cast<std::ptrdiff_t>(q));
                    via2.insert(via2.end(), rj.begin(), rj.end());
                    via2.insert(via2.end(), li.begin() + static_cast<std::ptrdiff_t>(q + lj.size()),
                                li.end());
                    check_pair(li, ri, via2, i, j);
                }
            }
        }
    }
}

void RewritingSystem::check_inverses() const {
    for (int a = 1; a <= alphabet_; ++a) {
        int b = inverse_[static_cast<std::size_t>(a - 1)];
        if (b < 1 || b > alphabet_) fail("inverse of letter " + std::to_string(a) + " out of range");
        if (inverse_[static_cast<std::size_t>(b - 1)] != a)
            fail("inverse map is not an involution at letter " + std::to_string(a));
        if (!reduce({a, b}).empty())
            fail("letter " + std::to_string(a) +
                 " does not cancel against its inverse under the rules");
    }
}

Word RewritingSystem::multiply(const Word& x, const Word& y) const {
    Word w = x;
    w.insert(w.end(), y.begin(), y.end());
    return reduce(std::move(w));
}

Word RewritingSystem::invert(const Word& x) const {
    Word w;
    w.reserve(x.size());
    for (auto it = x.rbegin(); it != x.rend(); ++it)
        w.push_back(inverse_[static_cast<std::size_t>(*it - 1)]);
    return reduce(std::move(w));
}

Word RewritingSystem::canonicalize(const Word& raw) const {
    Word w;
    w.reserve(raw.size());
    for (std::int32_t v : raw) {
        if (v == 0) fail("rewriting system letter may not be 0");
        if (v > 0) {
            if (v > alphabet_) fail("letter out of range: " + std::to_string(v));
            w.push_back(v);
        } else {
            if (-v > alphabet_) fail("letter out of range: " + std::to_string(v));
            w.push_back(inverse_[static_cast<std::size_t>(-v - 1)]);
        }
    }
    return reduce(std::move(w));
}

// ---------------------------------------------------------------------------
// Free functions and GeneratingSet

namespace {
void check_backend(const GroupBackend& g, const GroupElement& x) {
    if (x.backend_id != g.id())
        throw std::invalid_argument("group element belongs to a different backend");
}
}  // namespace

GroupElement make_element(const GroupBackend& g, const Word& raw) {
    return {g.id(), g.canonicalize(raw)};
}

GroupElement multiply(const GroupBackend& g, const GroupElement& x, const GroupElement& y) {
    check_backend(g, x);
    check_backend(g, y);
    return {g.id(), g.multiply(x.word, y.word)};
}

GroupElement invert(const GroupBackend& g, const GroupElement& x) {
    check_backend(g, x);
    return {g.id(), g.invert(x.word)};
}

GroupElement canonicalize(const GroupBackend& g, const Word& raw) {
    return make_element(g, raw);
}

GeneratingSet GeneratingSet::from_words(BackendPtr backend, const std::vector<Word>& raw_words) {
    if (!backend) throw std::invalid_argument("null backend");
    GeneratingSet s;
    s.backend = backend;
    std::unordered_set<Word, WordHash> seen;
    for (const Word& raw : raw_words) {
        Word c = backend->canonicalize(raw);
        if (seen.insert(c).second) s.elements.push_back(std::move(c));
    }
    for (const Word& w : s.elements)
        if (backend->is_identity(w)) s.contains_identity = true;
    s.symmetric = validate_symmetric(*backend, s);
    return s;
}

bool validate_symmetric(const GroupBackend& g, const GeneratingSet& s) {
    std::unordered_set<Word, WordHash> have(s.elements.begin(), s.elements.end());
    for (const Word& w : s.elements)
        if (!have.count(g.invert(w))) return false;
    return true;
}

}  // namespace hermcert
