#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mwnet {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Error categories raised across the library. The CLI maps these to exit codes.
enum class ErrorCode {
    Asymmetric,
    Indefinite,
    SelfLoop,
    DuplicateEdge,
    DimensionMismatch,
    IndefiniteWeight,
    NegativeWeightInUnsignedInput,
    GaugeConflict,
    PathBudgetExceeded,
    SearchBudgetExceeded,
    FactorizationMismatch,
    MultipleNbsEdgesOnPath,
    StepTooLarge,
    NotSettled,
    InfeasibleRecipe,
    InvalidDocument,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// Numerical tolerances shared by all modules. Defaults follow the library-wide
/// rank and definiteness rules; overridable from the CLI.
struct Tolerances {
    double sym = 1e-12;       ///< relative symmetry tolerance for weight matrices
    double def = 1e-9;        ///< eigenvalue |lambda| <= def*scale counts as zero
    double rank = 1e-9;       ///< eigenvalue <= rank*max(lambda_max,1) counts as zero
    double orth = 1e-10;      ///< orthonormality check
    double subspace = 1e-8;   ///< principal-angle threshold for subspace comparison
};

enum class Definiteness { Definite, Semidefinite, Zero };

/// Sign class of a symmetric weight: sign in {-1,0,+1} plus whether |W| is
/// positive definite, merely semidefinite, or zero.
struct SignClass {
    int sign = 0;
    Definiteness definiteness = Definiteness::Zero;

    bool is_definite() const { return definiteness == Definiteness::Definite; }
    bool is_semidefinite_strict() const { return definiteness == Definiteness::Semidefinite; }
};

struct Edge {
    int u = 0;  ///< node index (position in node_ids)
    int v = 0;
    Matrix weight;  ///< signed symmetric d x d matrix, stored as given
    SignClass sign_class;

    int other(int node) const { return node == u ? v : u; }
    bool touches(int node) const { return node == u || node == v; }
};

/// Simple undirected graph with symmetric matrix-valued edge weights.
/// Immutable after construction via validate_graph / lift_unsigned.
struct MatrixWeightedGraph {
    std::vector<std::string> node_ids;
    int dim = 0;
    std::vector<Edge> edges;
    bool connected = false;

    int num_nodes() const { return static_cast<int>(node_ids.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }
    /// Index of the edge between u and v, or -1.
    int find_edge(int u, int v) const;
    std::vector<int> incident_edges(int node) const;
};

struct Laplacian {
    Matrix blocks;  ///< dN x dN dense symmetric PSD
    int num_nodes = 0;
    int dim = 0;

    Eigen::Block<const Matrix> block(int i, int j) const {
        return blocks.block(i * dim, j * dim, dim, dim);
    }
};

/// Per-node signs sigma_i in {+1,-1} with sigma[0] = +1; expands to
/// D = diag(sigma) (x) I_d.
struct GaugeAssignment {
    std::vector<int> sigma;

    bool is_identity() const;
    Matrix to_matrix(int dim) const;
    /// Applies D to a stacked state: flips the d-block of every node with sigma = -1.
    Vector apply(const Vector& x, int dim) const;
};

/// Sign and definiteness of a symmetric matrix per the matrix-valued sgn().
/// Throws Error{Asymmetric} or Error{Indefinite}.
SignClass classify_weight(const Matrix& m, const Tolerances& tol = {});

/// Symmetrizes within tol.sym, rejects beyond.
Matrix symmetrize_checked(const Matrix& m, const Tolerances& tol);

/// Raw edge triple prior to validation.
struct RawEdge {
    std::string u, v;
    Matrix weight;
};

struct RawGraph {
    int dim = 0;
    std::vector<std::string> nodes;
    std::vector<RawEdge> edges;
};

/// Establishes all graph invariants: simple, classified weights, connectivity flag.
MatrixWeightedGraph validate_graph(const RawGraph& raw, const Tolerances& tol = {});

/// L = C - A with C_i = sum |A_ij| over neighbors.
Laplacian build_laplacian(const MatrixWeightedGraph& g);

/// Reinterprets an unsigned (all PSD) graph in the signed container.
/// Throws Error{NegativeWeightInUnsignedInput} if any weight is negative-type.
MatrixWeightedGraph lift_unsigned(const RawGraph& raw, const Tolerances& tol = {});

}  // namespace mwnet
