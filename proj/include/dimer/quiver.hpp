#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dimer {

struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& msg, int line_no)
      : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
        line(line_no) {}
};

// Raised when an input is well formed but outside the model (not a dimer tree,
// failed invariant, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric ids compare as integers, everything else as strings.
bool natural_less(const std::string& a, const std::string& b);

struct Arrow {
  std::string id;
  int src = -1;
  int tgt = -1;
  std::string label;
};

// Vertices are kept sorted by natural order of their ids, so vertex indices
// already encode the canonical ordering.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertex_ids, std::vector<Arrow> arrows);

  int num_vertices() const { return int(vertices_.size()); }
  int num_arrows() const { return int(arrows_.size()); }
  const std::string& vertex(int v) const { return vertices_[v]; }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const Arrow& arrow(int a) const { return arrows_[a]; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  int vertex_index(const std::string& id) const;  // -1 if absent
  int arrow_index(const std::string& id) const;   // -1 if absent
  // First arrow x -> y, or -1.
  int arrow_between(int x, int y) const;
  const std::vector<int>& out_arrows(int v) const { return out_[v]; }
  const std::vector<int>& in_arrows(int v) const { return in_[v]; }

  // Display name of an arrow: its label if present, otherwise its id.
  std::string arrow_name(int a) const;

  Quiver opposite() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vindex_, aindex_;
  std::vector<std::vector<int>> out_, in_;
};

// Accepts the line format or the JSON format (detected by a leading '{').
Quiver parse_quiver(const std::string& text);
std::string format_quiver(const Quiver& q);
std::string quiver_to_json(const Quiver& q);

struct ChordlessCycle {
  std::vector<int> arrows;  // cyclic order, starting at the smallest vertex
  int index = 0;            // position in the lexicographic order
  std::vector<int> vertices(const Quiver& q) const;  // in cycle order
  int length() const { return int(arrows.size()); }
};

std::vector<ChordlessCycle> chordless_cycles(const Quiver& q);

enum class ArrowKind { boundary, interior };

// Throws DomainError if an arrow is in no chordless cycle or in three or more.
std::vector<ArrowKind> classify_arrows(const Quiver& q, const std::vector<ChordlessCycle>& cycles);
std::vector<ArrowKind> classify_arrows(const Quiver& q);

struct TrunkEdge {
  int a = -1, b = -1;  // cycle indices
  int arrow = -1;
};

struct DualGraph {
  std::vector<ChordlessCycle> cycles;
  std::vector<ArrowKind> kinds;
  std::vector<std::vector<int>> arrow_cycles;  // per arrow, the cycles containing it
  std::vector<TrunkEdge> trunk;
  std::vector<std::vector<std::pair<int, int>>> adj;  // cycle -> (neighbour cycle, arrow)
  std::vector<int> boundary_arrows;                  // leaves, in arrow order
  int root = -1;                                     // C_0
  std::vector<int> dist;                             // d(i) per cycle
  std::vector<int> order;   // cycles sorted by (d, index): order[k] is C_k
  std::vector<int> label;   // inverse of order
  bool is_tree = false;

  // Position of arrow a inside cycle c, or -1.
  int position(int c, int a) const;
  // The other cycle sharing interior arrow a with cycle c, or -1.
  int across(int c, int a) const;
};

// Requires classify_arrows to succeed.
DualGraph dual_graph(const Quiver& q);

struct Violation {
  std::string rule;
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
  bool theorem_scope = false;  // every chordless cycle has length 3
  int root_cycle = -1;
  std::string root_vertices;  // C_0 vertex list, recorded as metadata
};

ValidationReport validate_dimer_tree(const Quiver& q);

// Parses and validates; throws DomainError with the report summary on failure.
DualGraph validated_dual_graph(const Quiver& q);

}  // namespace dimer
