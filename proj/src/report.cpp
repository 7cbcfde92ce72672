#include "tubealg/report.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tubealg {

using nlohmann::json;

std::string format_real(double x) {
  if (std::abs(x) < 1e-12) return "0";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string format_complex(Cplx z, const RenderOptions& opts) {
  double mag = std::abs(z);
  if (mag < 1e-10) return "0";
  // Try to snap the phase to a rational multiple of pi with denominator <= q.
  double frac = std::arg(z) / M_PI;  // in (-1, 1]
  std::string phase;
  bool snapped = false;
  for (int den = 1; den <= opts.snap_denominator && !snapped; ++den) {
    double num = frac * den;
    if (std::abs(num - std::lround(num)) < opts.snap_tol * den) {
      long p = std::lround(num);
      long q = den;
      long g = std::gcd(std::abs(p) == 0 ? 1 : std::abs(p), q);
      p /= g;
      q /= g;
      if (p == 0) phase = "";
      else if (p == 1 && q == 1) phase = "-";  // e^{i pi} = -1
      else if (std::abs(p) == 1 && q == 2) phase = (p > 0) ? "i*" : "-i*";
      else {
        std::ostringstream os;
        os << "e^{" << (p < 0 ? "-" : "") << "i pi";
        if (std::abs(p) != 1) os << " " << std::abs(p);
        if (q != 1) os << "/" << q;
        os << "}";
        phase = os.str();
      }
      snapped = true;
    }
  }
  if (!snapped) {
    std::ostringstream os;
    os << format_real(z.real());
    if (std::abs(z.imag()) > 1e-10) os << (z.imag() > 0 ? "+" : "") << format_real(z.imag()) << "i";
    return os.str();
  }
  // Magnitude: prefer integers and square roots of small integers.
  std::string m;
  if (std::abs(mag - std::lround(mag)) < 1e-9) {
    long v = std::lround(mag);
    m = (v == 1) ? "" : std::to_string(v);
  } else {
    bool root = false;
    for (int k = 2; k <= 64 && !root; ++k) {
      double r = std::sqrt(static_cast<double>(k));
      if (std::abs(mag - r) < 1e-9) {
        m = "sqrt(" + std::to_string(k) + ")";
        root = true;
      } else if (std::abs(mag - 1.0 / r) < 1e-9) {
        m = "1/sqrt(" + std::to_string(k) + ")";
        root = true;
      } else if (std::abs(mag - r / 2.0) < 1e-9 && k != 4) {
        m = "sqrt(" + std::to_string(k) + ")/2";
        root = true;
      }
    }
    if (!root) m = format_real(mag);
  }
  if (phase == "-") return m.empty() ? "-1" : "-" + m;
  if (phase == "i*" || phase == "-i*")
    return m.empty() ? phase.substr(0, phase.size() - 1) : phase + m;
  if (phase.empty()) return m.empty() ? "1" : m;
  return m.empty() ? phase : m + " " + phase;
}

namespace {

json complex_json(Cplx z) {
  json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

json matrix_json(const MatrixXcd& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

// Tube columns that support idempotent coefficients: p = r only.
std::vector<int> ici_columns(const TubeAlgebra& T) {
  std::vector<int> cols;
  for (int i = 0; i < T.size(); ++i)
    if (T.basis[i].p == T.basis[i].r) cols.push_back(i);
  return cols;
}

json block_table_json(const TubeAlgebra& T, const std::vector<std::string>& labels,
                      const std::vector<VectorXcd>& vecs, double norm) {
  json out = json::array();
  for (size_t a = 0; a < vecs.size(); ++a) {
    json row;
    row["label"] = labels[a];
    json entries = json::array();
    for (int i = 0; i < T.size(); ++i) {
      if (std::abs(vecs[a][i]) < 1e-10) continue;
      const TubeLabel& t = T.basis[i];
      json e;
      e["p"] = T.cat.labels[t.p];
      e["q"] = T.cat.labels[t.q];
      e["r"] = T.cat.labels[t.r];
      e["s"] = T.cat.labels[t.s];
      Cplx c = vecs[a][i] * norm;
      e["re"] = c.real();
      e["im"] = c.imag();
      entries.push_back(e);
    }
    row["rows"] = entries;
    out.push_back(row);
  }
  return out;
}

std::string render_coeff_table(const json& payload, const RenderOptions& opts,
                               const std::string& heading) {
  std::ostringstream os;
  const json& table = payload;
  // Collect column keys in first-appearance order.
  std::vector<std::string> cols;
  for (const auto& row : table)
    for (const auto& e : row["rows"]) {
      std::string key = "T[" + e["p"].get<std::string>() + "," + e["q"].get<std::string>() + "," +
                        e["r"].get<std::string>() + ";" + e["s"].get<std::string>() + "]";
      if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
    }
  os << "| " << heading << " |";
  for (const auto& c : cols) os << " " << c << " |";
  os << "\n|---|";
  for (size_t i = 0; i < cols.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& row : table) {
    os << "| " << row["label"].get<std::string>() << " |";
    std::vector<std::string> cells(cols.size());
    for (const auto& e : row["rows"]) {
      std::string key = "T[" + e["p"].get<std::string>() + "," + e["q"].get<std::string>() + "," +
                        e["r"].get<std::string>() + ";" + e["s"].get<std::string>() + "]";
      size_t idx = std::find(cols.begin(), cols.end(), key) - cols.begin();
      cells[idx] = format_complex(Cplx(e["re"].get<double>(), e["im"].get<double>()), opts);
    }
    for (const auto& c : cells) os << " " << (c.empty() ? "." : c) << " |";
    os << "\n";
  }
  return os.str();
}

std::string render_matrix(const json& m, const std::vector<std::string>& labels, double scale,
                          const RenderOptions& opts, const std::string& title) {
  std::ostringstream os;
  os << "| " << title << " |";
  for (const auto& l : labels) os << " " << l << " |";
  os << "\n|---|";
  for (size_t i = 0; i < labels.size(); ++i) os << "---|";
  os << "\n";
  for (size_t i = 0; i < labels.size(); ++i) {
    os << "| " << labels[i] << " |";
    for (size_t j = 0; j < labels.size(); ++j) {
      Cplx z(m[i][j]["re"].get<double>(), m[i][j]["im"].get<double>());
      os << " " << format_complex(scale * z, opts) << " |";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace

TheoryReport::TheoryReport() : payload(new json(json::object())) {}
TheoryReport::TheoryReport(TheoryReport&& o) noexcept
    : provenance(std::move(o.provenance)),
      seed(o.seed),
      tol(o.tol),
      kind(std::move(o.kind)),
      payload(o.payload),
      render(o.render) {
  o.payload = nullptr;
}
TheoryReport::~TheoryReport() { delete payload; }

std::string TheoryReport::to_json() const {
  json j;
  j["provenance"] = provenance;
  j["seed"] = seed;
  j["tol"] = tol;
  j["kind"] = kind;
  j["snap_denominator"] = render.snap_denominator;
  j["payload"] = *payload;
  return j.dump(2) + "\n";
}

std::string TheoryReport::to_markdown() const {
  std::ostringstream os;
  const json& p = *payload;
  os << "# " << kind << ": " << provenance << "\n\n";
  os << "seed " << seed << ", tol " << tol << "\n\n";
  if (p.contains("algebra_dim"))
    os << "tube algebra dimension " << p["algebra_dim"].get<int>() << ", D_out = "
       << format_real(p["d_out"].get<double>()) << "\n\n";
  if (p.contains("ici_table")) {
    os << "## irreducible central idempotents (coefficients, 1/D^2 suppressed)\n\n";
    os << render_coeff_table(p["ici_table"], render, "block");
    os << "\n";
  }
  if (p.contains("blocks")) {
    os << "## blocks\n\n| block | D | d | theta | gamma |\n|---|---|---|---|---|\n";
    for (const auto& b : p["blocks"]) {
      os << "| " << b["label"].get<std::string>() << " | " << b["D"].get<int>() << " | "
         << format_real(b["d"].get<double>()) << " | "
         << format_complex(Cplx(b["theta"]["re"].get<double>(), b["theta"]["im"].get<double>()),
                           render)
         << " | ";
      if (b.contains("gamma")) os << format_real(b["gamma"].get<double>());
      os << " |\n";
    }
    os << "\n";
  }
  if (p.contains("S")) {
    std::vector<std::string> labels;
    for (const auto& b : p["blocks"]) labels.push_back(b["label"].get<std::string>());
    double dsq = p["d_out"].get<double>();
    os << "## modular matrices\n\nD^2 S (D^2 = " << format_real(dsq) << "):\n\n";
    os << render_matrix(p["S"], labels, dsq, render, "D^2 S");
    os << "\nT = diag(";
    bool first = true;
    for (const auto& b : p["blocks"]) {
      if (!first) os << ", ";
      os << format_complex(Cplx(b["theta"]["re"].get<double>(), b["theta"]["im"].get<double>()),
                           render);
      first = false;
    }
    os << ")\n\n";
  }
  if (p.contains("fusion")) {
    os << "## fusion (nonzero Verlinde integers)\n\n";
    for (const auto& f : p["fusion"])
      os << f["a"].get<std::string>() << " x " << f["b"].get<std::string>() << " -> "
         << f["c"].get<std::string>() << "  (" << f["N"].get<int>() << ")\n";
    os << "\n";
  }
  if (p.contains("kappa")) {
    os << "## duals and Frobenius-Schur indicators\n\n| block | dual | kappa |\n|---|---|---|\n";
    for (const auto& k : p["kappa"])
      os << "| " << k["label"].get<std::string>() << " | " << k["dual"].get<std::string>() << " | "
         << format_complex(Cplx(k["re"].get<double>(), k["im"].get<double>()), render) << " |\n";
    os << "\n";
  }
  if (p.contains("defect_table")) {
    os << "## defect idempotents by sector (coefficients, 1/D_1^2 suppressed)\n\n";
    os << render_coeff_table(p["defect_table"], render, "defect");
    os << "\n## domain walls (canonical gauge)\n\n";
    os << render_coeff_table(p["walls"], render, "wall");
    os << "\n## group action\n\n";
    for (const auto& r : p["rho"]) {
      os << "rho_" << r["h"].get<std::string>() << ":";
      for (const auto& m : r["map"])
        os << " " << m["from"].get<std::string>() << "->" << m["to"].get<std::string>();
      os << "\n";
    }
    os << "\n## eta cocycles (canonical gauge)\n\n";
    for (const auto& e : p["eta"]) {
      os << e["defect"].get<std::string>() << ": ";
      bool first = true;
      for (const auto& v : e["values"]) {
        if (!first) os << ", ";
        os << "eta(" << v["h"].get<std::string>() << "," << v["k"].get<std::string>() << ") = "
           << format_complex(Cplx(v["re"].get<double>(), v["im"].get<double>()), render);
        first = false;
      }
      os << "\n";
    }
    os << "\n## twisted sector dimensions\n\n";
    for (const auto& d : p["twisted_dims"])
      os << "dim(" << d["g"].get<std::string>() << "," << d["h"].get<std::string>()
         << ") = " << d["dim"].get<int>() << "\n";
    os << "\n## G-crossed S (nonzero entries)\n\n";
    for (const auto& s : p["gxS"])
      os << "S[" << s["a"].get<std::string>() << "][" << s["b"].get<std::string>() << "] = "
         << format_complex(Cplx(s["re"].get<double>(), s["im"].get<double>()), render) << "\n";
    os << "\n## G-crossed T (twisted spins)\n\n";
    for (const auto& s : p["gxT"])
      os << "theta[O^" << s["h"].get<std::string>() << "_" << s["a"].get<std::string>() << "] = "
         << format_complex(Cplx(s["re"].get<double>(), s["im"].get<double>()), render) << "\n";
    os << "\n";
  }
  if (p.contains("gauged")) {
    os << "## gauged blocks\n\n| label | D | d | theta |\n|---|---|---|---|\n";
    for (const auto& b : p["gauged"])
      os << "| " << b["label"].get<std::string>() << " | " << b["D"].get<int>() << " | "
         << format_real(b["d"].get<double>()) << " | "
         << format_complex(Cplx(b["theta"]["re"].get<double>(), b["theta"]["im"].get<double>()),
                           render)
         << " |\n";
    os << "\nMorita match against the direct double: "
       << (p["morita_match"].get<bool>() ? "yes" : "no") << "\n\n";
  }
  if (p.contains("condensation")) {
    const json& c = p["condensation"];
    os << "## condensation\n\n| sector | defect | D | d | condensed anyons |\n|---|---|---|---|---|\n";
    for (const auto& row : c["defects"]) {
      os << "| " << row["sector"].get<std::string>() << " | " << row["label"].get<std::string>()
         << " | " << row["D"].get<int>() << " | " << format_real(row["d"].get<double>()) << " |";
      for (const auto& m : row["anyons"]) os << " " << m.get<std::string>();
      os << " |\n";
    }
    os << "\ncondensed to vacuum (Rep(G) bosons):";
    for (const auto& a : c["condensed_vacuum"]) os << " " << a.get<std::string>();
    os << "\nconfined defects:";
    for (const auto& a : c["confined"]) os << " " << a.get<std::string>();
    os << "\n\n";
  }
  return os.str();
}

namespace {

json blocks_json(const TubeAlgebra& T, const BlockDecomposition& dec, const ModularData* md) {
  json blocks = json::array();
  for (int a = 0; a < dec.size(); ++a) {
    json b;
    b["label"] = dec.blocks[a].label;
    b["D"] = dec.blocks[a].dim;
    b["d"] = dec.blocks[a].qdim;
    b["theta"] = complex_json(dec.blocks[a].theta);
    if (md) b["gamma"] = md->gamma[a];
    blocks.push_back(b);
  }
  return blocks;
}

}  // namespace

TheoryReport spectrum_report(const TubeAlgebra& T, const BlockDecomposition& dec,
                             const std::string& provenance, std::uint64_t seed, double tol,
                             const RenderOptions& opts) {
  TheoryReport rep;
  rep.kind = "spectrum";
  rep.provenance = provenance;
  rep.seed = seed;
  rep.tol = tol;
  rep.render = opts;
  json& p = *rep.payload;
  p["algebra_dim"] = T.size();
  p["d_out"] = T.alg.norm_sq;
  p["blocks"] = blocks_json(T, dec, nullptr);
  std::vector<std::string> labels;
  std::vector<VectorXcd> vecs;
  for (const auto& b : dec.blocks) {
    labels.push_back(b.label);
    vecs.push_back(b.ici);
  }
  p["ici_table"] = block_table_json(T, labels, vecs, T.alg.norm_sq);
  return rep;
}

TheoryReport modular_report(const TubeAlgebra& T, const BlockDecomposition& dec,
                            const ModularData& md, const std::string& provenance,
                            std::uint64_t seed, double tol, const RenderOptions& opts) {
  TheoryReport rep;
  rep.kind = "modular";
  rep.provenance = provenance;
  rep.seed = seed;
  rep.tol = tol;
  rep.render = opts;
  json& p = *rep.payload;
  p["algebra_dim"] = T.size();
  p["d_out"] = md.d_out;
  p["blocks"] = blocks_json(T, dec, &md);
  std::vector<std::string> labels;
  std::vector<VectorXcd> vecs;
  for (const auto& b : dec.blocks) {
    labels.push_back(b.label);
    vecs.push_back(b.ici);
  }
  p["ici_table"] = block_table_json(T, labels, vecs, T.alg.norm_sq);
  p["S"] = matrix_json(md.S);
  json fus = json::array();
  for (int a = 0; a < md.size(); ++a)
    for (int b = 0; b < md.size(); ++b)
      for (int c = 0; c < md.size(); ++c)
        if (md.N(a, b, c)) {
          json f;
          f["a"] = md.labels[a];
          f["b"] = md.labels[b];
          f["c"] = md.labels[c];
          f["N"] = md.N(a, b, c);
          fus.push_back(f);
        }
  p["fusion"] = fus;
  json kap = json::array();
  for (int a = 0; a < md.size(); ++a) {
    json k;
    k["label"] = md.labels[a];
    k["dual"] = md.labels[md.dual[a]];
    k["re"] = md.kappa[a].real();
    k["im"] = md.kappa[a].imag();
    kap.push_back(k);
  }
  p["kappa"] = kap;
  return rep;
}

TheoryReport defects_report(const DefectTheory& th, const std::string& provenance,
                            std::uint64_t seed, double tol, const RenderOptions& opts) {
  TheoryReport rep;
  rep.kind = "defects";
  rep.provenance = provenance;
  rep.seed = seed;
  rep.tol = tol;
  rep.render = opts;
  json& p = *rep.payload;
  const FiniteGroup& G = th.group();
  p["algebra_dim"] = th.dube->size();
  p["d_out"] = th.dube->alg.norm_sq;
  json blocks = json::array();
  std::vector<std::string> labels;
  std::vector<VectorXcd> vecs;
  for (int a = 0; a < th.count(); ++a) {
    json b;
    std::string lbl = G.names[th.sector[a]] + ":" + th.ddec.blocks[a].label;
    b["label"] = lbl;
    b["sector"] = G.names[th.sector[a]];
    b["D"] = th.ddec.blocks[a].dim;
    b["d"] = th.qdim[a];
    b["theta"] = complex_json(th.theta[a]);
    blocks.push_back(b);
    labels.push_back(lbl);
    vecs.push_back(th.ici[a]);
  }
  p["blocks"] = blocks;
  p["defect_table"] = block_table_json(*th.full, labels, vecs, th.dube->alg.norm_sq);
  // Walls for nontrivial group elements.
  std::vector<std::string> wlabels;
  std::vector<VectorXcd> wvecs;
  for (int a = 0; a < th.count(); ++a)
    for (int h = 1; h < G.size(); ++h) {
      wlabels.push_back("O^" + G.names[h] + "_" + labels[a]);
      wvecs.push_back(th.walls[a][h]);
    }
  p["walls"] = block_table_json(*th.full, wlabels, wvecs, th.dube->alg.norm_sq);
  json rho = json::array();
  for (int h = 1; h < G.size(); ++h) {
    json r;
    r["h"] = G.names[h];
    json map = json::array();
    for (int a = 0; a < th.count(); ++a) {
      json m;
      m["from"] = labels[a];
      m["to"] = labels[th.rho[h][a]];
      map.push_back(m);
    }
    r["map"] = map;
    rho.push_back(r);
  }
  p["rho"] = rho;
  json eta = json::array();
  for (int a = 0; a < th.count(); ++a) {
    json e;
    e["defect"] = labels[a];
    json vals = json::array();
    for (int h : th.stabilizer[a])
      for (int k : th.stabilizer[a]) {
        if (h == 0 || k == 0) continue;
        json v;
        v["h"] = G.names[h];
        v["k"] = G.names[k];
        v["re"] = th.eta[a](h, k).real();
        v["im"] = th.eta[a](h, k).imag();
        vals.push_back(v);
      }
    e["values"] = vals;
    eta.push_back(e);
  }
  p["eta"] = eta;
  auto dims = twisted_sector_dims(th);
  json td = json::array();
  for (int g = 0; g < G.size(); ++g)
    for (int h = 0; h < G.size(); ++h) {
      if (G.op(g, h) != G.op(h, g)) continue;
      json d;
      d["g"] = G.names[g];
      d["h"] = G.names[h];
      d["dim"] = dims[g][h];
      td.push_back(d);
    }
  p["twisted_dims"] = td;
  GxModular gx = gcrossed_modular(th);
  json gxs = json::array();
  for (int a = 0; a < th.count(); ++a)
    for (int b = 0; b < th.count(); ++b) {
      if (std::abs(gx.S(a, b)) < 1e-10) continue;
      json s;
      s["a"] = labels[a];
      s["b"] = labels[b];
      s["re"] = gx.S(a, b).real();
      s["im"] = gx.S(a, b).imag();
      gxs.push_back(s);
    }
  p["gxS"] = gxs;
  json gxt = json::array();
  for (int a = 0; a < th.count(); ++a)
    for (int h : th.stabilizer[a]) {
      if (h == 0) continue;
      json s;
      s["a"] = labels[a];
      s["h"] = G.names[h];
      s["re"] = gx.twisted_theta(a, h).real();
      s["im"] = gx.twisted_theta(a, h).imag();
      gxt.push_back(s);
    }
  p["gxT"] = gxt;
  return rep;
}

TheoryReport gauge_report(const GaugedTheory& gt, const ModularData& gauged,
                          const ModularData& direct, const std::string& provenance,
                          std::uint64_t seed, double tol, const RenderOptions& opts) {
  TheoryReport rep;
  rep.kind = "gauge";
  rep.provenance = provenance;
  rep.seed = seed;
  rep.tol = tol;
  rep.render = opts;
  json& p = *rep.payload;
  p["algebra_dim"] = gt.theory.full->size();
  p["d_out"] = gauged.d_out;
  json blocks = json::array();
  for (int i = 0; i < gt.count(); ++i) {
    json b;
    b["label"] = gt.label_name(i);
    b["D"] = gt.block_dim[i];
    b["d"] = gt.qdim[i];
    b["theta"] = complex_json(gt.theta[i]);
    blocks.push_back(b);
  }
  p["gauged"] = blocks;
  p["S"] = matrix_json(gauged.S);
  p["S_direct"] = matrix_json(direct.S);
  auto perm = match_modular_data(gauged, direct, 1e-7);
  p["morita_match"] = perm.has_value();
  // reuse the "blocks" renderer for the S table labels
  json blabels = json::array();
  for (int i = 0; i < gt.count(); ++i) {
    json b;
    b["label"] = gt.label_name(i);
    b["D"] = gt.block_dim[i];
    b["d"] = gt.qdim[i];
    b["theta"] = complex_json(gt.theta[i]);
    blabels.push_back(b);
  }
  p["blocks"] = blabels;
  return rep;
}

TheoryReport condense_report(const CondensationReport& crep, const std::string& provenance,
                             std::uint64_t seed, double tol, const RenderOptions& opts) {
  TheoryReport rep;
  rep.kind = "condense";
  rep.provenance = provenance;
  rep.seed = seed;
  rep.tol = tol;
  rep.render = opts;
  json& p = *rep.payload;
  const FiniteGroup& G = crep.cat.group();
  const DefectTheory& th = crep.theory;
  json c;
  json defects = json::array();
  for (int b = 0; b < th.count(); ++b) {
    json row;
    row["sector"] = G.names[th.sector[b]];
    row["label"] = G.names[th.sector[b]] + ":" + th.ddec.blocks[b].label;
    row["D"] = th.ddec.blocks[b].dim;
    row["d"] = th.qdim[b];
    json anyons = json::array();
    for (int a : crep.members[b]) anyons.push_back(crep.fdec.blocks[a].label);
    row["anyons"] = anyons;
    defects.push_back(row);
  }
  c["defects"] = defects;
  json vac = json::array();
  for (int a : crep.condensed_vacuum) vac.push_back(crep.fdec.blocks[a].label);
  c["condensed_vacuum"] = vac;
  json conf = json::array();
  for (int b : crep.confined) conf.push_back(G.names[th.sector[b]] + ":" + th.ddec.blocks[b].label);
  c["confined"] = conf;
  p["condensation"] = c;
  // The double's ICI table for reference.
  std::vector<std::string> labels;
  std::vector<VectorXcd> vecs;
  for (const auto& b : crep.fdec.blocks) {
    labels.push_back(b.label);
    vecs.push_back(b.ici);
  }
  p["algebra_dim"] = crep.full->size();
  p["d_out"] = crep.full->alg.norm_sq;
  p["ici_table"] = block_table_json(*crep.full, labels, vecs, crep.full->alg.norm_sq);
  return rep;
}

}  // namespace tubealg
