#include "hermcert/ball.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <sstream>
#include <stdexcept>

namespace hermcert {

namespace {

// Zigzag + LEB128. The encoding is minimal-length, so byte equality of
// encodings is equivalent to Word equality.
void encode_word(const Word& w, std::vector<std::uint8_t>& out) {
    out.clear();
    for (std::int32_t v : w) {
        std::uint32_t z = (static_cast<std::uint32_t>(v) << 1) ^ static_cast<std::uint32_t>(v >> 31);
        while (z >= 0x80) {
            out.push_back(static_cast<std::uint8_t>(z) | 0x80);
            z >>= 7;
        }
        out.push_back(static_cast<std::uint8_t>(z));
    }
}

Word decode_word(const std::uint8_t* p, std::size_t len) {
    Word w;
    std::size_t i = 0;
    while (i < len) {
        std::uint32_t z = 0;
        int shift = 0;
        while (true) {
            std::uint8_t b = p[i++];
            z |= static_cast<std::uint32_t>(b & 0x7f) << shift;
            if (!(b & 0x80)) break;
            shift += 7;
        }
        w.push_back(static_cast<std::int32_t>((z >> 1) ^ (~(z & 1) + 1)));
    }
    return w;
}

}  // namespace

std::size_t BallTable::memory_used_bytes() const {
    return arena_.capacity() + slots_.capacity() * sizeof(Slot);
}

bool BallTable::lookup(const std::uint8_t* bytes, std::size_t len, std::uint64_t hash,
                       std::uint64_t* offset_out) const {
    std::size_t mask = slots_.size() - 1;
    std::size_t i = static_cast<std::size_t>(hash) & mask;
    while (true) {
        const Slot& s = slots_[i];
        if (s.offset == Slot::kEmpty) return false;
        if (s.hash == hash && s.length == len &&
            std::memcmp(arena_.data() + s.offset, bytes, len) == 0) {
            if (offset_out) *offset_out = s.offset;
            return true;
        }
        i = (i + 1) & mask;
    }
}

void BallTable::insert_slot(std::uint64_t hash, std::uint64_t offset, std::uint32_t length) {
    std::size_t mask = slots_.size() - 1;
    std::size_t i = static_cast<std::size_t>(hash) & mask;
    while (slots_[i].offset != Slot::kEmpty) i = (i + 1) & mask;
    slots_[i] = {hash, offset, length};
    ++entry_count_;
    if (entry_count_ * 10 >= slots_.size() * 7) grow_slots();
}

void BallTable::grow_slots() {
    std::vector<Slot> old = std::move(slots_);
    slots_.assign(old.size() * 2, Slot{});
    std::size_t mask = slots_.size() - 1;
    for (const Slot& s : old) {
        if (s.offset == Slot::kEmpty) continue;
        std::size_t i = static_cast<std::size_t>(s.hash) & mask;
        while (slots_[i].offset != Slot::kEmpty) i = (i + 1) & mask;
        slots_[i] = s;
    }
}

std::vector<Word> BallTable::sphere_elements(int n) const {
    if (n < 0 || n > completed_)
        throw std::invalid_argument("sphere_elements: radius " + std::to_string(n) +
                                    " not enumerated (completed radius " +
                                    std::to_string(completed_) + ")");
    std::vector<Word> out;
    std::uint64_t begin = n == 0 ? 0 : layer_end_offset_[static_cast<std::size_t>(n) - 1];
    std::uint64_t end = layer_end_offset_[static_cast<std::size_t>(n)];
    std::uint64_t off = begin;
    while (off < end) {
        // Each stored word is preceded by its byte length as one varint.
        std::uint32_t len = 0;
        int shift = 0;
        while (true) {
            std::uint8_t b = arena_[off++];
            len |= static_cast<std::uint32_t>(b & 0x7f) << shift;
            if (!(b & 0x80)) break;
            shift += 7;
        }
        out.push_back(decode_word(arena_.data() + off, len));
        off += len;
    }
    return out;
}

std::optional<int> BallTable::length_of(const Word& w) const {
    std::vector<std::uint8_t> bytes;
    encode_word(w, bytes);
    std::uint64_t hash = hash_bytes(bytes.data(), bytes.size());
    std::uint64_t offset = 0;
    if (slots_.empty() || !lookup(bytes.data(), bytes.size(), hash, &offset)) return std::nullopt;
    auto it = std::upper_bound(layer_end_offset_.begin(), layer_end_offset_.end(), offset);
    return static_cast<int>(it - layer_end_offset_.begin());
}

BallTable enumerate_balls(const GeneratingSet& s, const BallOptions& options) {
    if (!s.backend) throw std::invalid_argument("enumerate_balls: generating set has no backend");
    if (s.elements.empty()) throw std::invalid_argument("enumerate_balls: empty generating set");
    if (options.n_max < 1) throw std::invalid_argument("enumerate_balls: n_max must be >= 1");

    const GroupBackend& g = *s.backend;
    BallTable t;
    t.backend_ = s.backend;
    t.generators_ = s;
    t.store_limit_ = options.store_limit;
    t.gens_contain_identity_ = s.contains_identity;
    t.slots_.assign(1 << 12, BallTable::Slot{});

    std::vector<std::uint8_t> bytes;
    auto intern = [&](const Word& w) -> bool {
        encode_word(w, bytes);
        std::uint64_t hash = hash_bytes(bytes.data(), bytes.size());
        if (t.lookup(bytes.data(), bytes.size(), hash, nullptr)) return false;
        std::uint32_t len = static_cast<std::uint32_t>(bytes.size());
        std::uint32_t z = len;
        while (z >= 0x80) {
            t.arena_.push_back(static_cast<std::uint8_t>(z) | 0x80);
            z >>= 7;
        }
        t.arena_.push_back(static_cast<std::uint8_t>(z));
        std::uint64_t offset = t.arena_.size();
        t.arena_.insert(t.arena_.end(), bytes.begin(), bytes.end());
        t.insert_slot(hash, offset, len);
        return true;
    };

    intern(g.identity_word());
    t.layer_end_offset_.push_back(t.arena_.size());
    t.ball_sizes_.push_back(1);
    t.sphere_sizes_.push_back(1);
    t.completed_ = 0;

    for (int n = 1; n <= options.n_max; ++n) {
        // B_n = B_{n-1} u (layer n-1) * S, so only the previous layer is
        // multiplied out.
        std::vector<Word> frontier = t.sphere_elements(n - 1);
        std::uint64_t added = 0;
        for (const Word& x : frontier) {
            for (const Word& gen : s.elements) {
                if (intern(g.multiply(x, gen))) ++added;
            }
        }
        if (t.memory_used_bytes() > options.memory_budget_bytes) {
            // Discard the partial layer: roll the arena and the counts back.
            std::uint64_t keep = t.layer_end_offset_.back();
            t.arena_.resize(keep);
            // Rebuild the slot table without the rolled-back entries.
            std::vector<BallTable::Slot> old = std::move(t.slots_);
            t.slots_.assign(old.size(), BallTable::Slot{});
            t.entry_count_ = 0;
            for (const auto& slot : old) {
                if (slot.offset == BallTable::Slot::kEmpty || slot.offset >= keep) continue;
                std::size_t mask = t.slots_.size() - 1;
                std::size_t i = static_cast<std::size_t>(slot.hash) & mask;
                while (t.slots_[i].offset != BallTable::Slot::kEmpty) i = (i + 1) & mask;
                t.slots_[i] = slot;
                ++t.entry_count_;
            }
            t.truncated_ = true;
            break;
        }
        t.layer_end_offset_.push_back(t.arena_.size());
        t.sphere_sizes_.push_back(added);
        t.ball_sizes_.push_back(t.ball_sizes_.back() + added);
        t.completed_ = n;
    }
    return t;
}

SubmultiplicativityReport check_submultiplicative(const BallTable& table) {
    SubmultiplicativityReport rep;
    int r = table.completed_radius();
    if (r < 3)
        throw std::invalid_argument("check_submultiplicative needs at least 3 enumerated radii");
    const auto& ball = table.ball_sizes();
    const auto& sphere = table.sphere_sizes();
    for (int n = 1; n <= r; ++n) {
        for (int k = 1; n + k <= r; ++k) {
            ++rep.pairs_checked;
            auto nk = static_cast<std::size_t>(n + k);
            if (ball[nk] > ball[static_cast<std::size_t>(n)] * ball[static_cast<std::size_t>(k)]) {
                rep.ok = false;
                std::ostringstream os;
                os << "ball submultiplicativity violated: |B_" << n + k << "| = " << ball[nk]
                   << " > " << ball[static_cast<std::size_t>(n)] << " * "
                   << ball[static_cast<std::size_t>(k)];
                rep.violation = os.str();
                return rep;
            }
            if (sphere[nk] >
                sphere[static_cast<std::size_t>(n)] * sphere[static_cast<std::size_t>(k)]) {
                rep.ok = false;
                std::ostringstream os;
                os << "sphere submultiplicativity violated at (" << n << "," << k << ")";
                rep.violation = os.str();
                return rep;
            }
        }
    }
    return rep;
}

AgreementReport omega_sigma_agreement(const BallTable& table, double tolerance) {
    AgreementReport rep;
    rep.tolerance = tolerance;
    int r = table.completed_radius();
    if (r < 1) throw std::invalid_argument("omega_sigma_agreement: empty table");
    rep.ball_root =
        std::pow(static_cast<double>(table.ball_sizes()[static_cast<std::size_t>(r)]), 1.0 / r);
    double sph = static_cast<double>(table.sphere_sizes()[static_cast<std::size_t>(r)]);
    rep.sphere_root = sph > 0 ? std::pow(sph, 1.0 / r) : 0.0;
    rep.difference = std::abs(rep.ball_root - rep.sphere_root);
    rep.within = rep.difference <= tolerance;
    return rep;
}

}  // namespace hermcert
