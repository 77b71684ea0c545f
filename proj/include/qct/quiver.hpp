#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace qct {

// Per-vertex integer function (dimension vector, weight, or coordinate
// vector), indexed by the owning quiver's vertex order.
using IntVector = std::vector<long long>;

// Finite connected acyclic multigraph with stable string vertex labels.
// Parallel arrows are permitted; arrow order is construction order.
class Quiver {
 public:
  struct Arrow {
    int tail;
    int head;
    bool operator==(const Arrow&) const = default;
  };

  Quiver(std::vector<std::string> vertex_names,
         const std::vector<std::pair<std::string, std::string>>& arrow_names);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const std::string& name_of(int v) const { return names_[static_cast<std::size_t>(v)]; }
  int index_of(const std::string& name) const;

  bool is_source(int v) const { return in_degree_[static_cast<std::size_t>(v)] == 0; }
  bool is_sink(int v) const { return out_degree_[static_cast<std::size_t>(v)] == 0; }
  // Every arrow's tail precedes its head.
  const std::vector<int>& topological_order() const { return topo_; }

  // entry [u][v] = number of arrows u -> v, under the vertex order.
  std::vector<std::vector<long long>> multiplicity_matrix() const;

  // Debugging dump {vertices: [...], arrows: [[tail, head], ...]}; not a
  // stability-guaranteed format.
  nlohmann::json to_json() const;

  bool operator==(const Quiver&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> index_;
  std::vector<int> in_degree_, out_degree_;
  std::vector<int> topo_;
};

// <alpha, beta> = sum_x alpha_x beta_x - sum_{a} alpha_{ta} beta_{ha}.
long long euler_form(const Quiver& q, const IntVector& alpha, const IntVector& beta);

// e_x: one at vertex v, zero elsewhere.
IntVector simple_vector(const Quiver& q, int v);

// The weight sigma with sigma_x = <alpha, e_x> for every vertex x.
IntVector weight_of(const Quiver& q, const IntVector& alpha);

// The unique alpha with weight_of(q, alpha) = sigma, solved in topological
// order via alpha_x = sigma_x + sum over arrows into x of alpha_tail.
IntVector dimvector_of_weight(const Quiver& q, const IntVector& sigma);

struct ReflectedData {
  Quiver quiver;
  IntVector beta;
  IntVector sigma;
};

// Reflection s_x at a source or sink: reverses all arrows at x and applies
//   (s_x beta)_x = -beta_x + sum over edges x--z of beta_z,
//   (s_x sigma)_x = -sigma_x,  (s_x sigma)_y = sigma_y + sigma_x * #edges(x,y).
// The beta component may go negative; checking that it is a genuine
// dimension vector is the caller's obligation.
ReflectedData reflect(const Quiver& q, const IntVector& beta, const IntVector& sigma,
                      const std::string& vertex);

// Removes v0, which must have exactly one outgoing arrow b: v0 -> w, weight
// sigma(v0) = 0, and beta(v0) >= beta(w).  Every incoming arrow v_i -> v0 is
// replaced by the composition v_i -> w; beta and sigma restrict.
ReflectedData remove_zero_weight_vertex(const Quiver& q, const IntVector& beta,
                                        const IntVector& sigma, const std::string& v0);

// Dimension vectors passing the Euler-form checks of an exceptional
// sequence: <e_i, e_i> = 1 for all i and <e_i, e_j> <= 0 for i < j.  The
// Schur-representation side conditions are recorded hypotheses, not checked.
class ExceptionalSequence {
 public:
  ExceptionalSequence(Quiver ambient, std::vector<IntVector> epsilons);

  const Quiver& ambient() const { return ambient_; }
  const std::vector<IntVector>& epsilons() const { return epsilons_; }
  std::size_t size() const { return epsilons_.size(); }

 private:
  Quiver ambient_;
  std::vector<IntVector> epsilons_;
};

// The quiver on vertices "1".."N" with max(0, -<e_i, e_j>) arrows i -> j.
Quiver quiver_of_sequence(const ExceptionalSequence& seq);

// I(gamma) = sum_i gamma_i * e_i, a vector on the ambient quiver.
IntVector embed(const ExceptionalSequence& seq, const IntVector& gamma);

}  // namespace qct
