#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace spherekit {

using VertexId = int;

/// Thrown on malformed user input (bad ids, duplicate vertices, unknown names).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an operation's precondition fails (e.g. a predicate that
/// requires a homology sphere is handed something else).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A face is a set of vertex ids, stored as a 64-bit mask.
/// Complexes in this library never exceed 64 vertices.
class Face {
public:
    static constexpr int kMaxVertices = 64;

    constexpr Face() = default;
    static constexpr Face from_bits(std::uint64_t bits) { return Face(bits); }

    static Face of(std::initializer_list<VertexId> vs) {
        return from_vertices(std::span<const VertexId>(vs.begin(), vs.size()));
    }

    /// Builds a face from a vertex list; rejects duplicates and out-of-range ids.
    static Face from_vertices(std::span<const VertexId> vs) {
        std::uint64_t bits = 0;
        for (VertexId v : vs) {
            if (v < 0 || v >= kMaxVertices)
                throw InputError("vertex id out of range: " + std::to_string(v));
            std::uint64_t b = std::uint64_t{1} << v;
            if (bits & b)
                throw InputError("duplicate vertex in face: " + std::to_string(v));
            bits |= b;
        }
        return Face(bits);
    }

    static constexpr Face single(VertexId v) { return Face(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr int dim() const { return size() - 1; }
    constexpr bool empty() const { return bits_ == 0; }

    constexpr bool contains(VertexId v) const { return (bits_ >> v) & 1; }
    constexpr bool subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr Face operator|(Face o) const { return Face(bits_ | o.bits_); }
    constexpr Face operator&(Face o) const { return Face(bits_ & o.bits_); }
    /// Set difference.
    constexpr Face operator-(Face o) const { return Face(bits_ & ~o.bits_); }

    constexpr bool operator==(const Face&) const = default;

    int min_vertex() const { return std::countr_zero(bits_); }

    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    /// Iterates vertices in increasing order without materializing a vector.
    template <typename F>
    void for_each_vertex(F&& fn) const {
        for (std::uint64_t b = bits_; b; b &= b - 1)
            fn(std::countr_zero(b));
    }

private:
    constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on sorted vertex sequences ({0,3} < {1,2}, prefixes first).
inline bool lex_less(Face a, Face b) {
    std::uint64_t x = a.bits(), y = b.bits();
    while (x && y) {
        int va = std::countr_zero(x), vb = std::countr_zero(y);
        if (va != vb) return va < vb;
        x &= x - 1;
        y &= y - 1;
    }
    return !x && y;
}

inline bool operator<(Face a, Face b) { return lex_less(a, b); }

std::string to_string(Face f);

}  // namespace spherekit

template <>
struct std::hash<spherekit::Face> {
    std::size_t operator()(const spherekit::Face& f) const noexcept {
        return std::hash<std::uint64_t>{}(f.bits());
    }
};
