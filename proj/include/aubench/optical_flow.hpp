#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <iosfwd>
#include <optional>

namespace aubench {

// Grayscale frame; row index is y, column index is x.
using Image = Eigen::ArrayXXd;

struct FlowField {
  int width = 0;
  int height = 0;
  Eigen::ArrayXXd u;  // horizontal displacement
  Eigen::ArrayXXd v;  // vertical displacement
  std::optional<Eigen::ArrayXXd> strain;
};

struct HornSchunckParams {
  double alpha = 15.0;  // smoothness weight
  int iterations = 200;
};

// Dense optical flow between two equally sized frames via the Horn-Schunck
// iteration. Deterministic for fixed parameters. Throws on dimension
// mismatch or iterations < 1.
FlowField compute_flow(const Image& a, const Image& b,
                       const HornSchunckParams& params = {});

// Adds the optical-strain channel sqrt(exx^2 + eyy^2 + 2*exy^2) from the
// infinitesimal strain tensor of (u, v). Central differences inside, one
// sided at the borders, so strain stays defined on the full grid.
FlowField compute_strain(FlowField flow);

// Exact area-average resampling to out_h x out_w.
Eigen::ArrayXXd area_resize(const Eigen::ArrayXXd& src, int out_h, int out_w);

// Model input vector: (u, v, strain) resized by area averaging to
// out_size x out_size, then flattened row-major in channel order. Strain is
// computed on demand when missing.
Eigen::VectorXd flow_to_feature(const FlowField& flow, int out_size = 28);

// P5/P2 PGM reader.
Image load_pgm(std::istream& in);
Image load_pgm_file(const std::filesystem::path& p);

// Raw 8-bit plane with sidecar dimensions, row-major.
Image image_from_bytes(const unsigned char* data, int width, int height);

}  // namespace aubench
