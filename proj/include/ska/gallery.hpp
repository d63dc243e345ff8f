#ifndef SKA_GALLERY_HPP
#define SKA_GALLERY_HPP

#include <array>
#include <set>

#include "ska/apolar.hpp"
#include "ska/koszul.hpp"

namespace ska {

// ---------------------------------------------------------------- matrices

struct MatrixShape {
    enum class Kind : uint8_t { generic, symmetric, skew, hankel };
    Kind kind;
    size_t m = 0, n = 0;
    // 1-based zeroed entries; symmetric entries are stored with i <= j
    std::set<std::pair<int, int>> zeros;

    static MatrixShape generic(size_t m, size_t n, std::set<std::pair<int, int>> zeros = {});
    static MatrixShape symmetric(size_t n, std::set<std::pair<int, int>> zeros = {});
    static MatrixShape skew(size_t n);
    static MatrixShape hankel(size_t m, size_t n);
};

struct SymbolicMatrix {
    RingPtr ring;
    size_t m = 0, n = 0;
    std::vector<std::vector<Polynomial>> entry;
};

SymbolicMatrix build_matrix(const MatrixShape& shape, const Field& field);

Polynomial det(const SymbolicMatrix& M);

// all 2-minors, zero minors dropped, duplicates (up to scalar) removed
IdealPresentation minors2(const MatrixShape& shape, const Field& field);

RingPtr skew_ring(size_t N, const Field& field);

// all size-Pfaffians of the generic N x N skew matrix, via row expansion
std::vector<Polynomial> pfaffians(size_t N, size_t size, const Field& field);

// --------------------------------------------------------- apolar galleries

std::vector<Polynomial> minors_apolar_gens(size_t m, size_t n, const Field& field);
std::vector<Polynomial> permanent_apolar_gens(size_t m, size_t n, const Field& field);
std::vector<Polynomial> pfaffian_apolar_gens(size_t N, const Field& field);

// raw 2x2 sub-permanents with repeated row/column indices allowed, deduped
std::vector<Polynomial> generalized_2_permanents(size_t m, size_t n, const Field& field);

InverseSystemModule maximal_minors_module(size_t m, size_t n, const Field& field);
InverseSystemModule pfaffian_module(size_t N, const Field& field);
// determinant of the generic symmetric 3x3 matrix as a cyclic inverse system
InverseSystemModule symmetric_det3_module(const Field& field);

// ------------------------------------------------------------ 27 lines

struct LinesIncidence {
    std::vector<std::string> line_names;          // 27 labels
    std::vector<std::array<int, 3>> planes;       // 45 tritangent planes
    std::vector<std::vector<int>> line_planes;    // per line, the planes through it

    // -1 when the two lines span no tritangent plane
    int common_plane(int l1, int l2) const;
};

LinesIncidence lines27();

struct LinesLemmaReport {
    bool four_subsets_have_skew_pair = false;   // part (i), all C(27,4) subsets
    bool coplanar_triples_share_plane = false;  // part (ii)
    bool planes_meet_through_lines = false;     // part (iii), 27 x 40 pairs
    uint64_t four_subsets_checked = 0;
    uint64_t line_plane_pairs_checked = 0;
    bool ok() const {
        return four_subsets_have_skew_pair && coplanar_triples_share_plane &&
               planes_meet_through_lines;
    }
};

LinesLemmaReport verify_lemma_27lines(const LinesIncidence& L);

LinesIncidence drop_plane(LinesIncidence L, size_t plane_index);

RingPtr cayley_ring(const Field& field);

struct CayleyReport {
    std::vector<int> ranked;       // the total order used, highest line first
    MonomialIdeal J;
    size_t quadratic_count = 0;
    bool all_degree4_in_J = false;              // claim A
    bool at_least_351_quadrics = false;         // claim B
    bool one_standard_cubic = false;            // claim C
    Monomial standard_cubic;
    int lowest_plane = -1;
    std::vector<long> hf;  // degrees 0..4

    bool ok() const {
        return all_degree4_in_J && at_least_351_quadrics && one_standard_cubic &&
               hf == std::vector<long>{1, 27, 27, 1, 0};
    }
};

// leading-term ideal of the Cayley-cubic quadric set for the revlex order of
// the given line ranking, plus the combinatorial claims about it
CayleyReport cayley_monomial_ideal(const std::vector<int>& ranked, const Field& field);

// ------------------------------------------------------- counterexamples

IdealPresentation clebsch_ideal(const Field& field);
std::vector<Polynomial> clebsch_gb16(const Field& field);
InverseSystemModule clebsch_module(const Field& field);

IdealPresentation cycle_family(size_t n, const Field& field);
std::vector<Polynomial> cycle_family_gb(size_t n, const Field& field);
InverseSystemModule cycle_module(size_t n, const Field& field);

struct SimplicialForm {
    RingPtr acting_ring;
    DualForm form;
};
// F = sum over facets G of z_G * prod_{i in G} x_i, for a pure complex on n vertices
SimplicialForm simplicial_form(size_t n_vertices, const std::vector<std::vector<int>>& facets,
                               const Field& field);

// ------------------------------------------------------------- CLI names

// minors:gen:MxN[:zeros=i,j;i,j], minors:sym:N[:zeros=...], minors:hankel:MxN,
// pfaffians:N:size, apolar:minors:MxN, apolar:pf:N, apolar:symdet, clebsch,
// cycle:N, cayley
IdealPresentation gallery_ideal(const std::string& name, const Field& field);
bool is_gallery_name(const std::string& name);

}  // namespace ska

#endif
