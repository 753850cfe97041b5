// Copyright 2026 The ionscatter Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ionscatter/scattering.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "ionscatter/constants.hpp"
#include "ionscatter/errors.hpp"

namespace ionscatter {

namespace k = constants;

using CVec = Eigen::VectorXcd;

ModelVariant ModelVariant::full(bool higher_levels) { return {ModelKind::full, higher_levels, true, true}; }

ModelVariant ModelVariant::simplified() { return {ModelKind::simplified, false, false, false}; }

void ModelVariant::check() const {
  if (kind == ModelKind::simplified && (include_higher_levels || include_counter_rotating || include_frequency_cubed)) {
    throw DomainError("the simplified model excludes higher levels, counter-rotating terms and the frequency factor");
  }
}

std::string ModelVariant::str() const { return kind == ModelKind::full ? "full" : "simplified"; }

BeamConfig BeamConfig::raman_pair(Encoding enc, double power, double waist) {
  BeamConfig b;
  b.waist = waist;
  b.geometry = Geometry::counter_propagating_pair;
  if (enc == Encoding::m) {
    b.beams = {{Polarization::pi(), power, BeamLabel::red}, {Polarization::pi(), power, BeamLabel::blue}};
  } else {
    const double s = 1.0 / std::sqrt(2.0);
    b.beams = {{Polarization{-s, 0.0, s}, power, BeamLabel::red}, {Polarization{s, 0.0, s}, power, BeamLabel::blue}};
  }
  return b;
}

BeamConfig BeamConfig::ms_triplet(Encoding enc, double power, double waist) {
  BeamConfig b = raman_pair(enc, power, waist);
  b.geometry = Geometry::co_propagating_pair_plus_counter;
  Beam third = b.beams[1];
  third.power = 2.0 * power;
  third.label = BeamLabel::third;
  b.beams.push_back(third);
  return b;
}

const Beam& BeamConfig::find(BeamLabel label) const {
  for (const auto& beam : beams) {
    if (beam.label == label) return beam;
  }
  throw DomainError("beam configuration lacks the requested beam");
}

std::vector<std::string> BeamConfig::validate() const {
  std::vector<std::string> out;
  if (!(waist > 0)) out.push_back("waist must be positive");
  for (const auto& beam : beams) {
    if (beam.power < 0) out.push_back("beam power must be >= 0");
    if (!beam.polarization.is_normalized()) out.push_back("beam polarization is not normalized");
  }
  if (geometry == Geometry::co_propagating_pair_plus_counter) {
    if (beams.size() != 3) {
      out.push_back("co-propagating pair plus counter beam needs three beams");
    } else {
      const double p0 = beams[0].power, p1 = beams[1].power, p2 = beams[2].power;
      if (std::abs(p0 - p1) > 1e-12 * std::max(p0, p1) || std::abs(p2 - 2 * p0) > 1e-12 * p2) {
        out.push_back("counter-propagating beam must carry twice the power of each co-propagating beam");
      }
    }
  }
  return out;
}

double ScatteringBreakdown::raman_total() const {
  double s = 0.0;
  for (const auto& e : entries) {
    if (e.classification == Classification::raman) s += e.rate_lambda_v + e.rate_ladder;
  }
  return s;
}

double ScatteringBreakdown::rayleigh_total() const {
  double s = 0.0;
  for (const auto& e : entries) {
    if (e.classification == Classification::rayleigh) s += e.rate_lambda_v + e.rate_ladder;
  }
  return s;
}

struct ScatteringEngine::Impl {
  struct Manifold {
    std::string label;
    double energy = 0.0;
    int dim = 0;
    HalfInt J;
    bool higher = false;
    // Columns: basis used to resolve final states (dressed for the qubit manifold).
    Eigen::MatrixXd basis;
    std::vector<HyperfineState> basis_labels;
  };
  std::vector<Manifold> manifolds;
  // dipole[(a, b)][q + 1] = <a, mJ, mI| r_q |b, mJ', mI'> in Bohr radii.
  std::map<std::pair<int, int>, std::array<Eigen::MatrixXd, 3>> dipole;
  int qubit = -1;
  int p32 = -1;
  std::vector<int> intermediates;
  std::vector<int> finals;
  std::vector<int> ladder_finals;
  std::array<CVec, 2> states;
  std::array<int, 2> state_column{};

  bool coupled(int a, int b) const { return dipole.count({a, b}) > 0; }

  CVec apply_q(int a, int b, int q, const CVec& v) const {
    return dipole.at({a, b})[q + 1].cast<std::complex<double>>() * v;
  }

  CVec apply(int a, int b, const Polarization& p, const CVec& v) const {
    CVec out = CVec::Zero(manifolds[a].dim);
    const auto& d = dipole.at({a, b});
    for (int q = -1; q <= 1; ++q) {
      const std::complex<double> c = p.component(q);
      if (c == 0.0) continue;
      out += c * (d[q + 1].cast<std::complex<double>>() * v);
    }
    return out;
  }
};

namespace {

void check_pole(double denominator, double scale, const std::string& level) {
  if (std::abs(denominator) <= 1e-12 * scale) throw PoleError("detuning is on the " + level + " resonance");
}

}  // namespace

ScatteringEngine::ScatteringEngine(const SpeciesData& species, DressedQubit qubit, ModelVariant model)
    : species_(std::make_shared<const SpeciesData>(species)), qubit_(std::move(qubit)), model_(model) {
  model_.check();
  auto impl = std::make_shared<Impl>();
  const SpeciesData& s = *species_;
  const HalfInt I = s.nuclear_spin;
  const int ni = I.twice() + 1;
  for (const auto& l : s.levels) {
    Impl::Manifold m;
    m.label = l.label;
    m.energy = l.energy;
    m.J = l.J;
    m.dim = (l.J.twice() + 1) * ni;
    m.higher = l.higher;
    impl->manifolds.push_back(std::move(m));
  }
  impl->qubit = s.level_index(qubit_.level);
  impl->p32 = s.level_index("P3/2");
  if (impl->qubit < 0 || impl->p32 < 0) throw DataError("species lacks the qubit manifold or P3/2");

  for (const auto& t : s.transitions) {
    const int u = s.level_index(t.upper), l = s.level_index(t.lower);
    for (auto [a, b] : {std::pair{u, l}, std::pair{l, u}}) {
      const auto& ma = impl->manifolds[a];
      const auto& mb = impl->manifolds[b];
      std::array<Eigen::MatrixXd, 3> d;
      for (int q = -1; q <= 1; ++q) {
        Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(ma.dim, mb.dim);
        for (int ja = -ma.J.twice(); ja <= ma.J.twice(); ja += 2) {
          const int jb = ja - 2 * q;
          if (std::abs(jb) > mb.J.twice()) continue;
          const double v = dipole_element_J(s, ma.label, HalfInt::from_twice(ja), q, mb.label, HalfInt::from_twice(jb));
          if (v == 0.0) continue;
          for (int mi = -I.twice(); mi <= I.twice(); mi += 2) {
            const HalfInt mI = HalfInt::from_twice(mi);
            mat(product_index(ma.J, I, HalfInt::from_twice(ja), mI), product_index(mb.J, I, HalfInt::from_twice(jb), mI)) =
                v;
          }
        }
        d[q + 1] = std::move(mat);
      }
      impl->dipole[{a, b}] = std::move(d);
    }
  }

  // Resolution bases: dressed states for the qubit manifold, zero-field |F, mF> elsewhere.
  for (int a = 0; a < static_cast<int>(impl->manifolds.size()); ++a) {
    auto& m = impl->manifolds[a];
    m.basis = Eigen::MatrixXd::Zero(m.dim, m.dim);
    if (a == impl->qubit) {
      for (int col = 0; col < m.dim; ++col) {
        const auto& st = qubit_.spectrum.states[col];
        m.basis.col(col) = Eigen::Map<const Eigen::VectorXd>(st.amplitudes.data(), m.dim);
        m.basis_labels.push_back({m.label, st.F, st.mF});
      }
      continue;
    }
    int col = 0;
    for (const auto& hs : hyperfine_sublevels(s, m.label)) {
      for (int mj = -m.J.twice(); mj <= m.J.twice(); mj += 2) {
        const int mi = hs.mF.twice() - mj;
        if (std::abs(mi) > I.twice()) continue;
        m.basis(product_index(m.J, I, HalfInt::from_twice(mj), HalfInt::from_twice(mi)), col) =
            clebsch_gordan(m.J, HalfInt::from_twice(mj), I, HalfInt::from_twice(mi), hs.F, hs.mF);
      }
      m.basis_labels.push_back(hs);
      ++col;
    }
  }

  for (int a = 0; a < static_cast<int>(impl->manifolds.size()); ++a) {
    if (!impl->coupled(a, impl->qubit)) continue;
    if (impl->manifolds[a].higher && !model_.include_higher_levels) continue;
    impl->intermediates.push_back(a);
  }
  for (int f = 0; f < static_cast<int>(impl->manifolds.size()); ++f) {
    bool reach = false;
    for (int kk : impl->intermediates) reach = reach || impl->coupled(f, kk);
    if (!reach) continue;
    impl->finals.push_back(f);
    if (impl->manifolds[f].energy < impl->manifolds[impl->qubit].energy) impl->ladder_finals.push_back(f);
  }

  const int dimq = impl->manifolds[impl->qubit].dim;
  impl->states[0] = Eigen::Map<const Eigen::VectorXd>(qubit_.state0.amplitudes.data(), dimq).cast<std::complex<double>>();
  impl->states[1] = Eigen::Map<const Eigen::VectorXd>(qubit_.state1.amplitudes.data(), dimq).cast<std::complex<double>>();
  for (int n = 0; n < 2; ++n) {
    const auto& st = n == 0 ? qubit_.state0 : qubit_.state1;
    for (int col = 0; col < dimq; ++col) {
      const auto& lab = impl->manifolds[impl->qubit].basis_labels[col];
      if (lab.F == st.F && lab.mF == st.mF) impl->state_column[n] = col;
    }
  }

  omega_Pi_ = impl->manifolds[impl->p32].energy - impl->manifolds[impl->qubit].energy;
  omega_f_ = impl->manifolds[impl->p32].energy - s.level("P1/2").energy;
  mu_Pi_ = mu(s, "P3/2", qubit_.level);
  if (!(mu_Pi_ > 0)) throw DataError("no P3/2 coupling to the qubit manifold");
  impl_ = std::move(impl);
}

double ScatteringEngine::gamma_Pi() const { return decay_rate(mu_Pi_, omega_Pi_); }

double ScatteringEngine::gamma_P() const {
  double g = 0.0;
  for (const auto& t : species_->transitions) {
    if (t.upper != "P3/2") continue;
    const LevelSpec& u = species_->level(t.upper);
    const LevelSpec& l = species_->level(t.lower);
    g += decay_rate(mu(u, l, t.reduced_element), u.energy - l.energy);
  }
  return g;
}

std::vector<double> ScatteringEngine::poles() const {
  std::vector<double> out;
  const double eP = impl_->manifolds[impl_->p32].energy;
  for (int kk : impl_->intermediates) out.push_back(impl_->manifolds[kk].energy - eP);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> ScatteringEngine::intermediate_levels() const {
  std::vector<std::string> out;
  for (int kk : impl_->intermediates) out.push_back(impl_->manifolds[kk].label);
  return out;
}

std::vector<std::string> ScatteringEngine::final_levels() const {
  std::vector<std::string> out;
  for (int f : impl_->finals) out.push_back(impl_->manifolds[f].label);
  return out;
}

double ScatteringEngine::coupling(const Beam& beam, double waist) const {
  return coupling_g(field_from_power(beam.power, waist), mu_Pi_).g;
}

namespace {

enum class Channel { lambda_v, ladder };

}  // namespace

// Visits every two-photon amplitude A(i, f-manifold, q) for one beam polarization,
// together with the photon-density factor that multiplies |A|^2.
template <typename Visit>
static void for_each_amplitude(const ScatteringEngine::Impl& im, const ModelVariant& model, double omega_Pi,
                               double delta, const Polarization& pol, Visit&& visit) {
  const auto& M = im.manifolds;
  const double eQ = M[im.qubit].energy;
  const double eP = M[im.p32].energy;
  const double wL = omega_Pi + delta;
  for (int kk : im.intermediates) check_pole(M[kk].energy - eP - delta, omega_Pi, M[kk].label);
  const Polarization conj = pol.conjugate();

  for (int n = 0; n < 2; ++n) {
    const CVec& i = im.states[n];
    std::map<int, CVec> absorbed, emitted_laser;
    std::map<int, std::array<CVec, 3>> emitted_first;
    for (int kk : im.intermediates) {
      absorbed[kk] = im.apply(kk, im.qubit, pol, i);
      for (int q = -1; q <= 1; ++q) emitted_first[kk][q + 1] = im.apply_q(kk, im.qubit, q, i);
      if (model.ladder()) emitted_laser[kk] = im.apply(kk, im.qubit, conj, i);
    }

    for (int f : im.finals) {
      const double eF = M[f].energy;
      const double w_sc = wL - (eF - eQ);
      if (w_sc <= 0) continue;
      const double density =
          model.include_frequency_cubed ? decay_rate_per_mu2(w_sc) : decay_rate_per_mu2(eP - eF);
      if (density == 0.0) continue;
      for (int q = -1; q <= 1; ++q) {
        CVec A = CVec::Zero(M[f].dim);
        for (int kk : im.intermediates) {
          if (!im.coupled(f, kk)) continue;
          A += im.apply_q(f, kk, q, absorbed[kk]) / (M[kk].energy - eP - delta);
          if (model.include_counter_rotating) {
            A += im.apply(f, kk, pol, emitted_first[kk][q + 1]) / ((M[kk].energy - eQ) + w_sc);
          }
        }
        visit(n, f, Channel::lambda_v, density, A);
      }
    }

    if (!model.ladder()) continue;
    for (int f : im.ladder_finals) {
      const double w_sc = (eQ - M[f].energy) - wL;
      if (w_sc <= 0) continue;
      const double density = decay_rate_per_mu2(w_sc);
      for (int q = -1; q <= 1; ++q) {
        CVec A = CVec::Zero(M[f].dim);
        for (int kk : im.intermediates) {
          if (!im.coupled(f, kk)) continue;
          A += im.apply_q(f, kk, q, emitted_laser[kk]) / ((M[kk].energy - eQ) + wL);
          A += im.apply(f, kk, conj, emitted_first[kk][q + 1]) / ((M[kk].energy - eQ) + w_sc);
        }
        visit(n, f, Channel::ladder, density, A);
      }
    }
  }
}

ScatteringTotals ScatteringEngine::totals(double delta, const Polarization& pol) const {
  ScatteringTotals t;
  const double norm = 0.5 / (mu_Pi_ * mu_Pi_);
  const Impl& im = *impl_;
  for_each_amplitude(im, model_, omega_Pi_, delta, pol, [&](int n, int f, Channel ch, double density, const CVec& A) {
    const double n2 = A.squaredNorm();
    if (ch == Channel::ladder) {
      t.raman_ladder += norm * density * n2;
      return;
    }
    if (f != im.qubit) {
      t.raman_lambda_v += norm * density * n2;
      return;
    }
    // Project out |i> on the amplitude rather than subtracting norms: for g qubits
    // the Raman part is orders of magnitude below the elastic part.
    const std::complex<double> overlap = im.states[n].dot(A);
    t.rayleigh += norm * density * std::norm(overlap);
    t.raman_lambda_v += norm * density * (A - overlap * im.states[n]).squaredNorm();
  });
  return t;
}

ScatteringTotals ScatteringEngine::totals(double delta, const BeamConfig& beams) const {
  ScatteringTotals t;
  for (const auto& beam : beams.beams) {
    const double g = coupling(beam, beams.waist);
    if (g == 0.0) continue;
    ScatteringTotals one = totals(delta, beam.polarization);
    t.raman_lambda_v += g * g * one.raman_lambda_v;
    t.raman_ladder += g * g * one.raman_ladder;
    t.rayleigh += g * g * one.rayleigh;
  }
  return t;
}

ScatteringBreakdown ScatteringEngine::breakdown(double delta, const BeamConfig& beams) const {
  const Impl& im = *impl_;
  const double norm = 0.5 / (mu_Pi_ * mu_Pi_);
  // (initial, manifold, column) -> accumulated rates
  std::map<std::tuple<int, int, int>, std::pair<double, double>> acc;
  for (const auto& beam : beams.beams) {
    const double g = coupling(beam, beams.waist);
    if (g == 0.0) continue;
    for_each_amplitude(im, model_, omega_Pi_, delta, beam.polarization,
                       [&](int n, int f, Channel ch, double density, const CVec& A) {
                         const Eigen::VectorXcd proj = im.manifolds[f].basis.cast<std::complex<double>>().adjoint() * A;
                         for (int col = 0; col < proj.size(); ++col) {
                           const double r = g * g * norm * density * std::norm(proj(col));
                           if (r == 0.0) continue;
                           auto& slot = acc[{n, f, col}];
                           (ch == Channel::ladder ? slot.second : slot.first) += r;
                         }
                       });
  }
  ScatteringBreakdown out;
  for (const auto& [key, rates] : acc) {
    const auto [n, f, col] = key;
    ScatteringEntry e;
    e.initial = n;
    e.final_state = im.manifolds[f].basis_labels[col];
    e.rate_lambda_v = rates.first;
    e.rate_ladder = rates.second;
    e.classification =
        (f == im.qubit && col == im.state_column[n]) ? Classification::rayleigh : Classification::raman;
    out.entries.push_back(e);
  }
  return out;
}

std::complex<double> ScatteringEngine::rabi_per_g2(double delta, const Polarization& red,
                                                   const Polarization& blue) const {
  const Impl& im = *impl_;
  const auto& M = im.manifolds;
  const double eQ = M[im.qubit].energy;
  const double eP = M[im.p32].energy;
  const double wL = omega_Pi_ + delta;
  const Polarization red_c = red.conjugate(), blue_c = blue.conjugate();
  std::complex<double> sum = 0.0;
  for (int kk : im.intermediates) {
    const double d1 = M[kk].energy - eP - delta;
    check_pole(d1, omega_Pi_, M[kk].label);
    CVec up = im.apply(kk, im.qubit, blue, im.states[0]);
    sum += im.states[1].dot(im.apply(im.qubit, kk, red_c, up)) / d1;
    if (model_.include_counter_rotating) {
      CVec up2 = im.apply(kk, im.qubit, blue_c, im.states[0]);
      sum += im.states[1].dot(im.apply(im.qubit, kk, red, up2)) / ((M[kk].energy - eQ) + wL);
    }
  }
  return sum / (mu_Pi_ * mu_Pi_);
}

double rate_lambda_v(const SpeciesData& species, const DressedQubit& qubit, const BeamConfig& beams, double delta,
                     const HyperfineState& f, const ModelVariant& model) {
  ScatteringEngine eng(species, qubit, model);
  double r = 0.0;
  for (const auto& e : eng.breakdown(delta, beams).entries) {
    if (e.final_state == f) r += e.rate_lambda_v;
  }
  return r;
}

double rate_ladder(const SpeciesData& species, const DressedQubit& qubit, const BeamConfig& beams, double delta,
                   const HyperfineState& f, const ModelVariant& model) {
  if (qubit.spec.encoding == Encoding::g) return 0.0;
  ScatteringEngine eng(species, qubit, model);
  double r = 0.0;
  for (const auto& e : eng.breakdown(delta, beams).entries) {
    if (e.final_state == f) r += e.rate_ladder;
  }
  return r;
}

double raman_total(const SpeciesData& species, const DressedQubit& qubit, const BeamConfig& beams, double delta,
                   const ModelVariant& model) {
  return ScatteringEngine(species, qubit, model).totals(delta, beams).raman();
}

double rayleigh_total(const SpeciesData& species, const DressedQubit& qubit, const BeamConfig& beams, double delta,
                      const ModelVariant& model) {
  return ScatteringEngine(species, qubit, model).totals(delta, beams).rayleigh;
}

double rho_reference_detuning(const ScatteringEngine& engine) { return -std::sqrt(0.01 * 0.1) * engine.omega_f(); }

double raman_fraction_rho(const ScatteringEngine& engine, const BeamConfig& beams) {
  const ScatteringTotals t = engine.totals(rho_reference_detuning(engine), beams);
  if (!(t.total() > 0)) throw DomainError("no scattering at the reference detuning");
  return t.raman() / t.total();
}

double raman_fraction_rho(const SpeciesData& species, const DressedQubit& qubit, const BeamConfig& beams,
                          const ModelVariant& model) {
  return raman_fraction_rho(ScatteringEngine(species, qubit, model), beams);
}

}  // namespace ionscatter
