#include "qct/quiver.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "qct/errors.hpp"

namespace qct {

namespace {

void require_defined_on(const Quiver& q, const IntVector& values, const char* what) {
  if (static_cast<int>(values.size()) != q.vertex_count())
    throw std::invalid_argument(std::string(what) + " is not defined on the quiver's vertex set");
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertex_names,
               const std::vector<std::pair<std::string, std::string>>& arrow_names)
    : names_(std::move(vertex_names)) {
  if (names_.empty()) throw std::invalid_argument("quiver needs at least one vertex");
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (!index_.emplace(names_[i], static_cast<int>(i)).second)
      throw std::invalid_argument("duplicate vertex name: " + names_[i]);

  in_degree_.assign(names_.size(), 0);
  out_degree_.assign(names_.size(), 0);
  arrows_.reserve(arrow_names.size());
  for (const auto& [tail, head] : arrow_names) {
    Arrow a{index_of(tail), index_of(head)};
    ++out_degree_[static_cast<std::size_t>(a.tail)];
    ++in_degree_[static_cast<std::size_t>(a.head)];
    arrows_.push_back(a);
  }

  // Weak connectivity over the underlying undirected graph.
  {
    std::vector<char> seen(names_.size(), 0);
    std::vector<std::vector<int>> adj(names_.size());
    for (const Arrow& a : arrows_) {
      adj[static_cast<std::size_t>(a.tail)].push_back(a.head);
      adj[static_cast<std::size_t>(a.head)].push_back(a.tail);
    }
    std::queue<int> frontier;
    frontier.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!frontier.empty()) {
      int v = frontier.front();
      frontier.pop();
      for (int w : adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++reached;
          frontier.push(w);
        }
    }
    if (reached != vertex_count()) throw std::invalid_argument("quiver is not connected");
  }

  // Kahn's algorithm; leftovers mean a directed cycle.
  {
    std::vector<int> remaining = in_degree_;
    std::queue<int> ready;
    for (int v = 0; v < vertex_count(); ++v)
      if (remaining[static_cast<std::size_t>(v)] == 0) ready.push(v);
    topo_.reserve(names_.size());
    while (!ready.empty()) {
      int v = ready.front();
      ready.pop();
      topo_.push_back(v);
      for (const Arrow& a : arrows_)
        if (a.tail == v && --remaining[static_cast<std::size_t>(a.head)] == 0) ready.push(a.head);
    }
    if (topo_.size() != names_.size())
      throw std::invalid_argument("quiver has a directed cycle");
  }
}

int Quiver::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::invalid_argument("unknown vertex: " + name);
  return it->second;
}

std::vector<std::vector<long long>> Quiver::multiplicity_matrix() const {
  std::vector<std::vector<long long>> mat(
      names_.size(), std::vector<long long>(names_.size(), 0));
  for (const Arrow& a : arrows_)
    ++mat[static_cast<std::size_t>(a.tail)][static_cast<std::size_t>(a.head)];
  return mat;
}

nlohmann::json Quiver::to_json() const {
  nlohmann::json arrows = nlohmann::json::array();
  for (const Arrow& a : arrows_)
    arrows.push_back({name_of(a.tail), name_of(a.head)});
  return {{"vertices", names_}, {"arrows", arrows}};
}

long long euler_form(const Quiver& q, const IntVector& alpha, const IntVector& beta) {
  require_defined_on(q, alpha, "alpha");
  require_defined_on(q, beta, "beta");
  long long total = 0;
  for (int v = 0; v < q.vertex_count(); ++v)
    total += alpha[static_cast<std::size_t>(v)] * beta[static_cast<std::size_t>(v)];
  for (const Quiver::Arrow& a : q.arrows())
    total -= alpha[static_cast<std::size_t>(a.tail)] * beta[static_cast<std::size_t>(a.head)];
  return total;
}

IntVector simple_vector(const Quiver& q, int v) {
  IntVector e(static_cast<std::size_t>(q.vertex_count()), 0);
  e.at(static_cast<std::size_t>(v)) = 1;
  return e;
}

IntVector weight_of(const Quiver& q, const IntVector& alpha) {
  require_defined_on(q, alpha, "alpha");
  // <alpha, e_x> = alpha_x - sum over arrows into x of alpha_tail.
  IntVector sigma = alpha;
  for (const Quiver::Arrow& a : q.arrows())
    sigma[static_cast<std::size_t>(a.head)] -= alpha[static_cast<std::size_t>(a.tail)];
  return sigma;
}

IntVector dimvector_of_weight(const Quiver& q, const IntVector& sigma) {
  require_defined_on(q, sigma, "sigma");
  IntVector alpha(sigma.size(), 0);
  for (int v : q.topological_order()) {
    long long incoming = 0;
    for (const Quiver::Arrow& a : q.arrows())
      if (a.head == v) incoming += alpha[static_cast<std::size_t>(a.tail)];
    alpha[static_cast<std::size_t>(v)] = sigma[static_cast<std::size_t>(v)] + incoming;
  }
  return alpha;
}

ReflectedData reflect(const Quiver& q, const IntVector& beta, const IntVector& sigma,
                      const std::string& vertex) {
  require_defined_on(q, beta, "beta");
  require_defined_on(q, sigma, "sigma");
  const int x = q.index_of(vertex);
  if (!q.is_source(x) && !q.is_sink(x))
    throw NotSourceOrSink("vertex " + vertex + " has both incoming and outgoing arrows");

  std::vector<std::pair<std::string, std::string>> arrows;
  arrows.reserve(static_cast<std::size_t>(q.arrow_count()));
  long long neighbor_sum = 0;
  IntVector edge_count(beta.size(), 0);
  for (const Quiver::Arrow& a : q.arrows()) {
    bool touches = (a.tail == x || a.head == x);
    if (touches) {
      int other = (a.tail == x) ? a.head : a.tail;
      neighbor_sum += beta[static_cast<std::size_t>(other)];
      ++edge_count[static_cast<std::size_t>(other)];
      arrows.emplace_back(q.name_of(a.head), q.name_of(a.tail));
    } else {
      arrows.emplace_back(q.name_of(a.tail), q.name_of(a.head));
    }
  }

  IntVector new_beta = beta;
  new_beta[static_cast<std::size_t>(x)] = -beta[static_cast<std::size_t>(x)] + neighbor_sum;
  IntVector new_sigma = sigma;
  for (int v = 0; v < q.vertex_count(); ++v)
    if (v != x)
      new_sigma[static_cast<std::size_t>(v)] +=
          sigma[static_cast<std::size_t>(x)] * edge_count[static_cast<std::size_t>(v)];
  new_sigma[static_cast<std::size_t>(x)] = -sigma[static_cast<std::size_t>(x)];

  return ReflectedData{Quiver(q.vertex_names(), arrows), std::move(new_beta),
                       std::move(new_sigma)};
}

ReflectedData remove_zero_weight_vertex(const Quiver& q, const IntVector& beta,
                                        const IntVector& sigma, const std::string& v0_name) {
  require_defined_on(q, beta, "beta");
  require_defined_on(q, sigma, "sigma");
  const int v0 = q.index_of(v0_name);

  int out_arrows = 0, w = -1;
  for (const Quiver::Arrow& a : q.arrows())
    if (a.tail == v0) {
      ++out_arrows;
      w = a.head;
    }
  if (out_arrows != 1)
    throw PreconditionViolated("vertex " + v0_name + " must have exactly one outgoing arrow, has " +
                               std::to_string(out_arrows));
  if (sigma[static_cast<std::size_t>(v0)] != 0)
    throw PreconditionViolated("vertex " + v0_name + " must have weight zero, has " +
                               std::to_string(sigma[static_cast<std::size_t>(v0)]));
  if (beta[static_cast<std::size_t>(v0)] < beta[static_cast<std::size_t>(w)])
    throw PreconditionViolated("dimension at " + v0_name + " (" +
                               std::to_string(beta[static_cast<std::size_t>(v0)]) +
                               ") must be at least the dimension at " + q.name_of(w) + " (" +
                               std::to_string(beta[static_cast<std::size_t>(w)]) + ")");

  std::vector<std::string> names;
  IntVector new_beta, new_sigma;
  for (int v = 0; v < q.vertex_count(); ++v)
    if (v != v0) {
      names.push_back(q.name_of(v));
      new_beta.push_back(beta[static_cast<std::size_t>(v)]);
      new_sigma.push_back(sigma[static_cast<std::size_t>(v)]);
    }

  // Incoming arrows compose through v0 onto w; the single outgoing arrow is
  // dropped.
  std::vector<std::pair<std::string, std::string>> arrows;
  for (const Quiver::Arrow& a : q.arrows()) {
    if (a.tail == v0) continue;
    if (a.head == v0)
      arrows.emplace_back(q.name_of(a.tail), q.name_of(w));
    else
      arrows.emplace_back(q.name_of(a.tail), q.name_of(a.head));
  }

  return ReflectedData{Quiver(std::move(names), arrows), std::move(new_beta),
                       std::move(new_sigma)};
}

ExceptionalSequence::ExceptionalSequence(Quiver ambient, std::vector<IntVector> epsilons)
    : ambient_(std::move(ambient)), epsilons_(std::move(epsilons)) {
  if (epsilons_.empty()) throw NotExceptional("sequence must be non-empty");
  for (std::size_t i = 0; i < epsilons_.size(); ++i) {
    require_defined_on(ambient_, epsilons_[i], "epsilon");
    for (long long value : epsilons_[i])
      if (value < 0) throw NotExceptional("epsilon entries must be non-negative");
    long long self = euler_form(ambient_, epsilons_[i], epsilons_[i]);
    if (self != 1)
      throw NotExceptional("<e_" + std::to_string(i + 1) + ", e_" + std::to_string(i + 1) +
                           "> = " + std::to_string(self) + ", expected 1");
  }
  for (std::size_t i = 0; i < epsilons_.size(); ++i)
    for (std::size_t j = i + 1; j < epsilons_.size(); ++j) {
      long long cross = euler_form(ambient_, epsilons_[i], epsilons_[j]);
      if (cross > 0)
        throw NotExceptional("<e_" + std::to_string(i + 1) + ", e_" + std::to_string(j + 1) +
                             "> = " + std::to_string(cross) + " is positive");
    }
}

Quiver quiver_of_sequence(const ExceptionalSequence& seq) {
  const std::size_t n = seq.size();
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i + 1));

  std::vector<std::pair<std::string, std::string>> arrows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      long long pairing = euler_form(seq.ambient(), seq.epsilons()[i], seq.epsilons()[j]);
      if (i < j && pairing > 0)
        throw NotExceptional("<e_" + std::to_string(i + 1) + ", e_" + std::to_string(j + 1) +
                             "> = " + std::to_string(pairing) + " is positive");
      for (long long k = 0; k < -pairing; ++k) arrows.emplace_back(names[i], names[j]);
    }
  return Quiver(std::move(names), arrows);
}

IntVector embed(const ExceptionalSequence& seq, const IntVector& gamma) {
  if (gamma.size() != seq.size())
    throw std::invalid_argument("gamma must have one coordinate per sequence entry");
  IntVector image(static_cast<std::size_t>(seq.ambient().vertex_count()), 0);
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t v = 0; v < image.size(); ++v)
      image[v] += gamma[i] * seq.epsilons()[i][v];
  return image;
}

}  // namespace qct
