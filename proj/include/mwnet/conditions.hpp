#pragma once

#include "mwnet/balance.hpp"
#include "mwnet/spectral.hpp"
#include "mwnet/topology.hpp"

namespace mwnet {

/// Sign grouping for one continent pair: the positive group holds the paths
/// whose effective sign is +1 (compatible with x_l = x_m in gauged
/// coordinates), the negative group the rest. The pair forces a unique
/// endpoint relation exactly when one group leaves no room to deviate.
struct PathGroups {
    std::vector<int> group_pos;  ///< path indices, effective sign +1
    std::vector<int> group_neg;
    Matrix s_pos;  ///< span(B_l u B_m) ^ (^ nulls of positive group)
    Matrix s_neg;
    bool grouping_holds = false;  ///< exactly one of s_pos, s_neg is {0}
    int forced_relation = 0;      ///< +1 (x_l = x_m) or -1, set when the grouping holds
};

PathGroups group_paths_by_sign(const std::vector<PathDescriptor>& paths, const Matrix& b_l,
                               const Matrix& b_m, int dim, const Tolerances& tol = {});

/// The concatenated edge null bases of the path have full column rank (no
/// direction can leak through two different edges of the same path).
bool check_null_independence(const PathDescriptor& path, const Tolerances& tol = {});

/// For a path carrying exactly one NBS edge: every other edge null intersects
/// span(B_l) ^ span(B_m) trivially, so the balancing relation stays rigid.
/// Throws Error{MultipleNbsEdgesOnPath} when more than one NBS edge is present.
bool check_nbs_path_condition(const PathDescriptor& path, const Matrix& b_l, const Matrix& b_m,
                              const Tolerances& tol = {});

/// Block constraint system tying the two endpoint states of a single path
/// through its edge constraints, used to count the solution-space dimension.
struct ConstraintSystem {
    int rho = 0;
    int dim = 0;
    int relation = 1;             ///< s: endpoint relation sign
    std::vector<int> edge_signs;  ///< s_i
    std::vector<int> alphas;      ///< alpha_i = s_1 ... s_i
    Matrix a_bar;                 ///< endpoint matrix, null(a_bar) = B_l ^ B_m
    Matrix gamma0;                ///< (rho+2)d x (rho+1)d block system
    // primary case (s = sgn(P)):
    Matrix r_block;    ///< [-a_1 I ... -a_rho I]
    Matrix q_block;    ///< blkdiag{-s_i A_i}
    Matrix gamma_bar;  ///< Q (I - R+ R)
    // NBS-edge case (s = -sgn(P)):
    Matrix gamma_bar0;
    Matrix a_hat;  ///< null(a_hat) = B_l ^ B_m ^ null(A_n)
    int nbs_position = -1;
};

/// Materializes Gamma_0 for the path with endpoint matrix a_bar and relation
/// sign s; fills the primary or NBS-edge blocks depending on s vs sgn(P).
ConstraintSystem build_path_constraint(const MatrixWeightedGraph& g, const PathDescriptor& path,
                                       const Matrix& a_bar, int relation,
                                       const Tolerances& tol = {});

struct RankSplit {
    int rank_r = 0;
    int rank_q_compressed = 0;  ///< rank(Q - Q R+ R)
    int rank_stacked = 0;
    bool identity_holds = false;
};

/// rank([R;Q]) = rank(R) + rank(Q - Q R+ R), all three computed.
RankSplit rank_split(const Matrix& r_block, const Matrix& q_block, const Tolerances& tol = {});

enum class Verdict { Holds, Fails, Inconclusive, NotApplicable };
const char* to_string(Verdict v);

struct PairReport {
    int l = 0, m = 0;
    std::vector<PathDescriptor> paths;
    PathGroups groups;
    bool node_independent = true;    ///< paths pairwise interior-disjoint
    bool primary_coverage = true;    ///< every pair bridge edge on a primary path
    bool all_length_one = true;      ///< every path is a single edge
    bool null_independence = true;   ///< edge nulls independent on every path
    bool nbs_path_condition = true;  ///< NBS-edge paths keep the shared null rigid
    std::vector<int> bridge_edges;     ///< edges used by any enumerated path
};

struct ConditionReport {
    bool connected = true;
    std::vector<Continent> continents;
    std::vector<int> effective_continents;  ///< indices into continents (pair analysis units)
    NbsResult nbs;
    Matrix nbs_null;                  ///< null(E^nb) of the unique NBS, when present
    std::vector<Matrix> continent_null;  ///< B_K per effective continent
    std::vector<PairReport> pairs;

    bool cond1_unique_nbs = false;
    bool cond2_grouping = true;
    bool cond3_node_independent = true;
    bool cond3_primary_coverage = true;
    bool cond3_all_length_one = true;
    bool cond4_null_independence = true;
    bool cond5_nbs_paths = true;
    bool coverage = true;  ///< every node on a continent or an enumerated path

    Verdict theorem_3_8 = Verdict::NotApplicable;
    Verdict corollary_3_11 = Verdict::NotApplicable;
    Verdict theorem_3_12 = Verdict::NotApplicable;
    bool theorem_3_12_biconditional = false;

    /// Predicted asymptotics: Consensus / Bipartite carry the NBS partition and
    /// Psi = null(E^nb); Cluster means "provably not bipartite" here.
    std::optional<SolutionKind> predicted;
    std::optional<GaugeAssignment> predicted_gauge;
    Matrix predicted_psi;
    Vector witness;  ///< non-bipartite null vector, when a violation yields one
};

struct AnalysisOptions {
    std::size_t path_cap = 10000;
    std::size_t partition_cap = std::size_t{1} << 20;
    Tolerances tol;
};

/// Runs continents -> NBS -> paths -> conditions and assembles the exported
/// verdicts (the verdict_theorem_* report fields).
ConditionReport full_verdict(const MatrixWeightedGraph& g, const AnalysisOptions& opts = {});

}  // namespace mwnet
