#ifndef METDIM_VERTEX_SET_HPP
#define METDIM_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace metdim {

// Subset of the vertices 0..63 as a fixed-width bitmask. All computations in
// this library are capped at 64 vertices, so one word always suffices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet all(int n) {
        return n >= 64 ? VertexSet(~std::uint64_t{0})
                       : VertexSet((std::uint64_t{1} << n) - 1);
    }
    static VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    bool contains(int v) const { return (bits_ >> v) & 1; }
    void add(int v) { bits_ |= std::uint64_t{1} << v; }
    void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    int count() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint64_t bits() const { return bits_; }

    // Smallest member; undefined on the empty set.
    int first() const { return std::countr_zero(bits_); }

    VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

    bool operator==(const VertexSet&) const = default;

    bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (std::uint64_t m = bits_; m != 0; m &= m - 1)
            out.push_back(std::countr_zero(m));
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

} // namespace metdim

#endif
