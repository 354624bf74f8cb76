#ifndef PROFSEMI_SPACE_HPP
#define PROFSEMI_SPACE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "profsemi/report.hpp"

namespace profsemi {

// A Boolean Stone space presented as an omega-indexed inverse chain of finite
// levels with surjective transitions. Builtin shapes are defined by rule at
// every level; `table` spaces only up to the depth their data covers.
class Space {
   public:
    enum class Kind { cantor, nat_infty, finite, depth_product, table };

    static Space cantor();
    static Space nat_infty();
    static Space finite(int k);
    static Space depth_product(std::vector<int> factors);
    static Space table(std::vector<int> level_sizes, std::vector<std::vector<int>> transitions);

    Kind kind() const { return kind_; }
    // number of cells at a level; throws depth_error past max_depth
    int level_size(int level) const;
    // image of a level+1 cell at the level below
    int transition(int level, int cell) const;
    // all level+1 cells over a level cell
    std::vector<int> fibre(int level, int cell) const;
    // least level+1 cell over a level cell
    int min_fibre_cell(int level, int cell) const;
    int max_depth() const { return max_depth_; }

    bool operator==(const Space& other) const;
    bool operator!=(const Space& other) const { return !(*this == other); }
    std::string describe() const;

   private:
    Space() = default;
    void check_level(int level) const;

    Kind kind_ = Kind::finite;
    int finite_size_ = 1;
    std::vector<int> factors_;
    std::vector<int> level_sizes_;
    std::vector<std::vector<int>> transitions_;
    int max_depth_ = 0;
};

// Parses "cantor", "nat_infty", "finite:3", "depth_product:2:3".
Space make_space_spec(const std::string& spec);

// Surjectivity of every transition up to `depth`; failures carry the missed
// cell.
ValidationReport validate_system(const Space& s, int depth);

// A clopen subset, held in canonical form: the least level at which its cell
// set is not a union of full transition fibres of the level below.
class Clopen {
   public:
    Clopen(const Space& space, int level, const std::vector<int>& cells);
    static Clopen empty(const Space& space);
    static Clopen full(const Space& space);

    const Space& space() const { return space_; }
    int level() const { return level_; }
    const std::vector<char>& mask() const { return mask_; }
    std::vector<int> cells() const;
    bool is_empty() const;
    bool contains_cell(int cell) const { return mask_[cell] != 0; }

    // mask of this clopen lifted to `level` (>= canonical level)
    std::vector<char> mask_at(int level) const;

   private:
    friend Clopen clopen_from_mask(const Space&, int, std::vector<char>);
    Space space_;
    int level_ = 0;
    std::vector<char> mask_;
    void canonicalise();
};

Clopen clopen_from_mask(const Space& space, int level, std::vector<char> mask);

Clopen clopen_and(const Clopen& a, const Clopen& b);
Clopen clopen_or(const Clopen& a, const Clopen& b);
Clopen clopen_diff(const Clopen& a, const Clopen& b);
Clopen clopen_not(const Clopen& a);
bool clopen_leq(const Clopen& a, const Clopen& b);
bool clopen_equal(const Clopen& a, const Clopen& b);

// Atoms of the Boolean subalgebra generated by the inputs: pairwise disjoint,
// nonempty, joining to the whole space, every generator a union of them.
std::vector<Clopen> atoms(const Space& space, const std::vector<Clopen>& generators);

// A point as a compatible thread of cells, materialised up to a certified
// depth. Operations that would read deeper throw depth_error.
class Point {
   public:
    // the thread through `cell` at `level` that picks the least fibre cell at
    // every deeper level
    static Point from_prefix(const Space& space, int level, int cell, int depth);
    // explicit thread, validated against the transitions
    static Point from_thread(const Space& space, std::vector<int> thread);

    const Space& space() const { return space_; }
    int at(int level) const;
    int depth() const { return static_cast<int>(thread_.size()) - 1; }
    bool min_extended() const { return min_extended_; }
    int prefix_level() const { return prefix_level_; }

   private:
    explicit Point(Space space) : space_(std::move(space)) {}
    Space space_;
    std::vector<int> thread_;
    bool min_extended_ = false;
    int prefix_level_ = -1;
};

bool point_in(const Point& p, const Clopen& c);

// Least level at which all threads are pairwise distinct, searched up to
// max_level; nullopt when some pair still agrees there.
std::optional<int> separation_level(const std::vector<Point>& points, int max_level);

// A continuous map presented stage-wise: the target level m is computed from
// the source level factor_level(m) via stage(m, -). Materialised up to a
// certified target depth.
class ContinuousMap {
   public:
    static ContinuousMap identity(const Space& space, int depth);
    // cantor -> finite(2), first character
    static ContinuousMap first_bit(int depth);
    // map factoring through one source level: cell x -> table[x] in finite(target_size)
    static ContinuousMap stage_quotient(const Space& source, int source_level,
                                        const std::vector<int>& table, int target_size, int depth);

    const Space& source() const { return source_; }
    const Space& target() const { return target_; }
    int depth() const { return static_cast<int>(factor_levels_.size()) - 1; }
    int factor_level(int target_level) const;
    int stage(int target_level, int source_cell) const;

    Point apply(const Point& p) const;
    Clopen preimage(const Clopen& c) const;
    // composition: first this, then g
    ContinuousMap then(const ContinuousMap& g) const;

   private:
    ContinuousMap() = default;
    Space source_ = Space::finite(1);
    Space target_ = Space::finite(1);
    std::vector<int> factor_levels_;
    std::vector<std::vector<int>> stage_;
};

// Stage maps must commute with the transitions on both sides.
ValidationReport validate_map(const ContinuousMap& f);

}  // namespace profsemi

#endif
