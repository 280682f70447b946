#include "aubench/optical_flow.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "aubench/error.hpp"

namespace aubench {

namespace {

// Replicate-border shift: result(y, x) = src(y + dy, x + dx), clamped.
Eigen::ArrayXXd shifted(const Eigen::ArrayXXd& src, int dy, int dx) {
  const Eigen::Index h = src.rows(), w = src.cols();
  Eigen::ArrayXXd out(h, w);
  for (Eigen::Index y = 0; y < h; ++y) {
    const Eigen::Index sy = std::clamp<Eigen::Index>(y + dy, 0, h - 1);
    for (Eigen::Index x = 0; x < w; ++x) {
      const Eigen::Index sx = std::clamp<Eigen::Index>(x + dx, 0, w - 1);
      out(y, x) = src(sy, sx);
    }
  }
  return out;
}

// Weighted neighbourhood average used by the Horn-Schunck iteration:
// 1/6 for the 4-neighbours, 1/12 for the diagonals.
Eigen::ArrayXXd local_average(const Eigen::ArrayXXd& f) {
  return (shifted(f, -1, 0) + shifted(f, 1, 0) + shifted(f, 0, -1) +
          shifted(f, 0, 1)) / 6.0 +
         (shifted(f, -1, -1) + shifted(f, -1, 1) + shifted(f, 1, -1) +
          shifted(f, 1, 1)) / 12.0;
}

}  // namespace

FlowField compute_flow(const Image& a, const Image& b,
                       const HornSchunckParams& params) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DataError("compute_flow: frame dimension mismatch");
  if (a.rows() < 2 || a.cols() < 2)
    throw DataError("compute_flow: frames must be at least 2x2");
  if (params.iterations < 1)
    throw DataError("compute_flow: iterations must be >= 1");

  // Derivative estimates averaged over the 2x2x2 cube spanned by both frames.
  const auto dxp = [&](const Image& f) { return shifted(f, 0, 1) - f; };
  const auto dyp = [&](const Image& f) { return shifted(f, 1, 0) - f; };
  Eigen::ArrayXXd ix =
      0.25 * (dxp(a) + shifted(dxp(a), 1, 0) + dxp(b) + shifted(dxp(b), 1, 0));
  Eigen::ArrayXXd iy =
      0.25 * (dyp(a) + shifted(dyp(a), 0, 1) + dyp(b) + shifted(dyp(b), 0, 1));
  Eigen::ArrayXXd it = 0.25 * ((b - a) + shifted(b - a, 1, 0) +
                               shifted(b - a, 0, 1) + shifted(b - a, 1, 1));

  const Eigen::ArrayXXd denom =
      params.alpha * params.alpha + ix.square() + iy.square();

  FlowField flow;
  flow.height = static_cast<int>(a.rows());
  flow.width = static_cast<int>(a.cols());
  flow.u = Eigen::ArrayXXd::Zero(a.rows(), a.cols());
  flow.v = Eigen::ArrayXXd::Zero(a.rows(), a.cols());
  for (int iter = 0; iter < params.iterations; ++iter) {
    const Eigen::ArrayXXd ubar = local_average(flow.u);
    const Eigen::ArrayXXd vbar = local_average(flow.v);
    const Eigen::ArrayXXd t = (ix * ubar + iy * vbar + it) / denom;
    flow.u = ubar - ix * t;
    flow.v = vbar - iy * t;
  }
  return flow;
}

FlowField compute_strain(FlowField flow) {
  const Eigen::Index h = flow.u.rows(), w = flow.u.cols();
  if (h == 0 || w == 0) throw DataError("compute_strain: empty flow field");
  if (flow.v.rows() != h || flow.v.cols() != w)
    throw DataError("compute_strain: u/v dimension mismatch");

  // d/dx with central differences, one-sided at the first and last column.
  const auto ddx = [&](const Eigen::ArrayXXd& f) {
    Eigen::ArrayXXd out(h, w);
    for (Eigen::Index y = 0; y < h; ++y) {
      for (Eigen::Index x = 0; x < w; ++x) {
        if (x == 0)
          out(y, x) = w > 1 ? f(y, 1) - f(y, 0) : 0.0;
        else if (x == w - 1)
          out(y, x) = f(y, x) - f(y, x - 1);
        else
          out(y, x) = 0.5 * (f(y, x + 1) - f(y, x - 1));
      }
    }
    return out;
  };
  const auto ddy = [&](const Eigen::ArrayXXd& f) {
    Eigen::ArrayXXd out(h, w);
    for (Eigen::Index y = 0; y < h; ++y) {
      for (Eigen::Index x = 0; x < w; ++x) {
        if (y == 0)
          out(y, x) = h > 1 ? f(1, x) - f(0, x) : 0.0;
        else if (y == h - 1)
          out(y, x) = f(y, x) - f(y - 1, x);
        else
          out(y, x) = 0.5 * (f(y + 1, x) - f(y - 1, x));
      }
    }
    return out;
  };

  const Eigen::ArrayXXd exx = ddx(flow.u);
  const Eigen::ArrayXXd eyy = ddy(flow.v);
  const Eigen::ArrayXXd exy = 0.5 * (ddy(flow.u) + ddx(flow.v));
  flow.strain = (exx.square() + eyy.square() + 2.0 * exy.square()).sqrt();
  return flow;
}

Eigen::ArrayXXd area_resize(const Eigen::ArrayXXd& src, int out_h, int out_w) {
  if (out_h <= 0 || out_w <= 0) throw DataError("area_resize: bad output size");
  const Eigen::Index h = src.rows(), w = src.cols();
  if (h == 0 || w == 0) throw DataError("area_resize: empty source");

  // Separable 1-D area resampling with fractional edge weights.
  const auto resample_rows = [](const Eigen::ArrayXXd& f, int out_n) {
    const Eigen::Index n = f.rows();
    Eigen::ArrayXXd out(out_n, f.cols());
    const double scale = static_cast<double>(n) / out_n;
    for (int o = 0; o < out_n; ++o) {
      const double lo = o * scale, hi = (o + 1) * scale;
      Eigen::ArrayXd acc = Eigen::ArrayXd::Zero(f.cols());
      for (Eigen::Index i = static_cast<Eigen::Index>(std::floor(lo)); i < n; ++i) {
        const double cell_lo = static_cast<double>(i);
        if (cell_lo >= hi) break;
        const double overlap = std::min(hi, cell_lo + 1.0) - std::max(lo, cell_lo);
        if (overlap > 0) acc += overlap * f.row(i).transpose();
      }
      out.row(o) = (acc / (hi - lo)).transpose();
    }
    return out;
  };
  const Eigen::ArrayXXd rows_done = resample_rows(src, out_h);
  return resample_rows(rows_done.transpose(), out_w).transpose();
}

Eigen::VectorXd flow_to_feature(const FlowField& flow, int out_size) {
  FlowField f = flow.strain ? flow : compute_strain(flow);
  const Eigen::ArrayXXd channels[3] = {area_resize(f.u, out_size, out_size),
                                       area_resize(f.v, out_size, out_size),
                                       area_resize(*f.strain, out_size, out_size)};
  Eigen::VectorXd out(3 * out_size * out_size);
  Eigen::Index k = 0;
  for (const auto& ch : channels)
    for (int y = 0; y < out_size; ++y)
      for (int x = 0; x < out_size; ++x) out(k++) = ch(y, x);
  return out;
}

Image load_pgm(std::istream& in) {
  std::string magic;
  in >> magic;
  if (magic != "P5" && magic != "P2") throw DataError("not a PGM stream");
  const auto next_token = [&in]() {
    std::string tok;
    while (in >> tok) {
      if (tok[0] == '#') {
        std::string rest;
        std::getline(in, rest);
        continue;
      }
      return tok;
    }
    throw DataError("truncated PGM header");
  };
  const int w = std::stoi(next_token());
  const int h = std::stoi(next_token());
  const int maxval = std::stoi(next_token());
  if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 255)
    throw DataError("unsupported PGM header");
  Image img(h, w);
  if (magic == "P5") {
    in.get();  // single whitespace after maxval
    std::vector<unsigned char> buf(static_cast<size_t>(w) * h);
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (in.gcount() != static_cast<std::streamsize>(buf.size()))
      throw DataError("truncated PGM payload");
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x)
        img(y, x) = buf[static_cast<size_t>(y) * w + x];
  } else {
    for (int y = 0; y < h; ++y)
      for (int x = 0; x < w; ++x) img(y, x) = std::stoi(next_token());
  }
  return img;
}

Image load_pgm_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot open PGM file '" + p.string() + "'");
  return load_pgm(in);
}

Image image_from_bytes(const unsigned char* data, int width, int height) {
  if (width <= 0 || height <= 0) throw DataError("image_from_bytes: bad dimensions");
  Image img(height, width);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      img(y, x) = data[static_cast<size_t>(y) * width + x];
  return img;
}

}  // namespace aubench
