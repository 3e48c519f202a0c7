#pragma once

#include <string>
#include <vector>

#include "dimer/quiver.hpp"

namespace dimer {

// Half-edge h = 2*e + side: side 0 runs u -> v, side 1 runs v -> u.
struct TwistedDualGraph {
  enum class NodeKind { cycle, leaf, completion };
  enum class EdgeKind { trunk, leaf, completion };
  struct Node {
    NodeKind kind;
    int ref = -1;  // cycle index, boundary arrow, or -1
  };
  struct Edge {
    EdgeKind kind;
    int u = -1, v = -1;
    int arrow = -1;  // trunk and leaf edges
  };
  struct Face {
    std::vector<int> half_edges;  // traced with the face on the left
    int completion_edges = 0;
    bool outer = false;
  };

  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> rotation;  // counterclockwise edge order per node
  std::vector<int> leaf_order;             // leaf nodes, clockwise
  std::vector<int> twist_order;            // trunk edges, in the order twisted
  std::vector<Face> faces;
  int outer_face = -1;
  std::vector<int> cycle_node;  // cycle index -> node
  std::vector<int> leaf_node;   // arrow -> node (or -1)

  int head(int h) const { return (h & 1) ? edges[h >> 1].u : edges[h >> 1].v; }
  int tail(int h) const { return (h & 1) ? edges[h >> 1].v : edges[h >> 1].u; }
  int next(int h) const;  // face tracing: first edge clockwise after the twin
  int num_completion_vertices() const;
  int num_completion_edges() const;
  int num_bounded_faces() const { return int(faces.size()) - 1; }
};

TwistedDualGraph twist_complete(const Quiver& q, const DualGraph& g);

struct RadicalLine {
  int vertex = -1;                 // quiver vertex i
  int minus = -1, plus = -1;       // boundary vertex indices
  std::vector<int> segments;       // medial edges from minus to plus
  struct Crossing {
    int arrow;       // interior medial vertex
    int other_line;  // quiver vertex of the crossing line
  };
  std::vector<Crossing> crossings;
};

class CheckerboardPolygon {
 public:
  enum class FaceKind { shaded_cycle, shaded_arrow, white, outer };
  struct Face {
    FaceKind kind;
    int ref = -1;                  // cycle index, boundary arrow, or G~ face
    std::vector<int> edges;        // medial edges on its boundary
    std::vector<int> boundary;     // incident boundary vertex indices
  };
  struct MedialVertex {
    int gedge = -1;
    bool boundary = false;
    int arrow = -1;        // interior vertices
    int index = -1;        // boundary position, clockwise from 0
    int sign = 0;          // -1 or +1 on the boundary
    std::vector<int> edges;  // incident medial edges, cyclic order
  };
  struct MedialEdge {
    int a = -1, b = -1;   // medial vertices
    int node = -1;        // corner node of G~
    int gface = -1;       // corner face of G~
    int label = -1;       // quiver vertex, -1 on boundary edges
    int face_left = -1, face_right = -1;  // shaded/outer side, white/outer side
  };

  CheckerboardPolygon(const Quiver& q, const DualGraph& g);

  const Quiver& quiver() const { return q_; }
  const DualGraph& dual() const { return g_; }
  const TwistedDualGraph& twisted() const { return tg_; }
  int size() const { return int(boundary_.size()); }  // 2N
  int half() const { return size() / 2; }              // N
  const std::vector<MedialVertex>& vertices() const { return mv_; }
  const std::vector<MedialEdge>& edges() const { return me_; }
  const std::vector<Face>& faces() const { return faces_; }
  int boundary_vertex(int k) const { return boundary_[((k % size()) + size()) % size()]; }
  int sign(int k) const;
  const RadicalLine& line(int i) const { return lines_[i]; }
  const std::vector<RadicalLine>& lines() const { return lines_; }
  // Faces incident to boundary vertex k (excluding the outer face).
  std::vector<int> faces_at(int k) const;
  int white_face_of_arrow(int a) const;  // bijection white region <-> boundary arrow
  int arrow_of_white_face(int f) const;
  int shaded_face_of_cycle(int c) const { return cycle_face_[c]; }
  int shaded_face_of_arrow(int a) const { return arrow_face_[a]; }
  // Labels of the interior edges of a white region, clockwise from the boundary.
  std::vector<int> white_labels_clockwise(int f) const;
  int root_vertex() const { return root_line_; }

 private:
  Quiver q_;
  DualGraph g_;
  TwistedDualGraph tg_;
  std::vector<MedialVertex> mv_;
  std::vector<MedialEdge> me_;
  std::vector<Face> faces_;
  std::vector<int> boundary_;
  std::vector<RadicalLine> lines_;
  std::vector<int> cycle_face_, arrow_face_;
  std::vector<int> white_arrow_, arrow_white_;
  int root_line_ = -1;

  void build_medial();
  void build_boundary();
  void build_lines();
  void check_invariants() const;
};

struct WhiteRegionPaths {
  int arrow = -1;                   // first arrow of the cycle path
  std::vector<int> cycle_path;      // arrows
  std::vector<int> cycles;          // C_1 .. C_{t-2}
  std::vector<int> valid1, valid2;  // maximal valid paths (arrows)
  int weight = 0;
};

// Computed from the quiver alone.
WhiteRegionPaths white_region_paths(const Quiver& q, const DualGraph& g, int boundary_arrow);
std::vector<WhiteRegionPaths> all_white_region_paths(const Quiver& q, const DualGraph& g);
int boundary_size_by_weights(const Quiver& q, const DualGraph& g);

// Boundary distance clockwise from a to b.
inline int cw_distance(int a, int b, int n) { return ((b - a) % n + n) % n; }
// Whether x lies strictly inside the clockwise arc from a to b.
inline bool in_open_cw_arc(int x, int a, int b, int n) {
  int d = cw_distance(a, x, n);
  return d > 0 && d < cw_distance(a, b, n);
}

}  // namespace dimer
