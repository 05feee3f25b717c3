//------------------------------- -*- C++ -*- -------------------------------//
// Copyright nestmc contributors: see top-level COPYRIGHT file for details
// SPDX-License-Identifier: (Apache-2.0 OR MIT)
//---------------------------------------------------------------------------//
//! \file nestmc/harness/Generators.cc
//---------------------------------------------------------------------------//
#include "Generators.hh"

#include <cmath>
#include <cstdlib>

#include "nestmc/arrays/HexArray.hh"
#include "nestmc/base/Assert.hh"

namespace nestmc
{
namespace
{
using nlohmann::json;

//---------------------------------------------------------------------------//
json plane(char axis, std::string const& name, real_type v)
{
    std::string type = "plane_";
    type += axis;
    return {{"name", name}, {"type", type}, {std::string(1, axis), v}};
}

json material(std::string const& name,
              std::vector<real_type> sigma_t,
              std::vector<std::vector<real_type>> sigma_s,
              std::vector<real_type> nu_sigma_f,
              std::vector<real_type> chi,
              real_type nu = 2.45)
{
    return {{"name", name},
            {"nu", nu},
            {"sigma_t", sigma_t},
            {"sigma_s", sigma_s},
            {"nu_sigma_f", nu_sigma_f},
            {"chi", chi}};
}

json fuel_material(std::string const& name, real_type scale)
{
    return material(name,
                    {0.45, 0.90},
                    {{0.40, 0.015}, {0.0, 0.74}},
                    {0.02 * scale, 0.38 * scale},
                    {1.0, 0.0});
}

json moderator_material()
{
    return material("moderator",
                    {0.60, 1.80},
                    {{0.53, 0.066}, {0.0, 1.78}},
                    {0.0, 0.0},
                    {1.0, 0.0});
}

json clad_material()
{
    return material(
        "clad", {0.30, 0.30}, {{0.29, 0.001}, {0.0, 0.295}}, {0.0, 0.0}, {1.0, 0.0});
}

json structure_material()
{
    return material("structure",
                    {0.50, 0.70},
                    {{0.45, 0.02}, {0.0, 0.62}},
                    {0.0, 0.0},
                    {1.0, 0.0});
}

std::string zname(size_type k)
{
    return "pz" + std::to_string(k);
}

std::vector<std::string> slab(size_type k)
{
    return {"+" + zname(k), "-" + zname(k + 1)};
}

std::vector<std::string>
concat(std::vector<std::string> a, std::vector<std::string> const& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<real_type> uniform_edges(real_type lo, real_type width, size_type n)
{
    std::vector<real_type> e;
    for (size_type i = 0; i <= n; ++i)
    {
        e.push_back(lo + width * i);
    }
    return e;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
json generate_minicore_rect(RectCoreParams const& p)
{
    size_type const n = p.assemblies;
    size_type const m = p.pins;
    size_type const s = p.slabs;
    size_type const r = p.radii.size();
    NMC_VALIDATE(n >= 1 && m >= 1 && s >= 1,
                 ConfigError,
                 << "minicore-rect needs at least one assembly, pin, and slab");
    NMC_VALIDATE(p.pitch > 0 && p.height > 0 && p.gap >= 0,
                 ConfigError,
                 << "minicore-rect pitch and height must be positive and gap "
                    "non-negative");
    NMC_VALIDATE(r >= 1, ConfigError, << "minicore-rect needs at least one radius");
    for (size_type i = 0; i < r; ++i)
    {
        NMC_VALIDATE(p.radii[i] > 0 && (i == 0 || p.radii[i] > p.radii[i - 1]),
                     ConfigError,
                     << "invalid pin radii: radii must be positive and "
                        "strictly increasing");
    }
    NMC_VALIDATE(p.radii.back() < p.pitch / 2,
                 ConfigError,
                 << "invalid pin radii: outer radius " << p.radii.back()
                 << " must be less than half the pitch " << p.pitch / 2);
    NMC_VALIDATE(!p.zoning.empty(), ConfigError, << "zoning must not be empty");

    size_type const nzones = (n + 1) / 2;
    real_type const half_h = p.height / 2;
    real_type const width = p.pitch * m;
    bool const has_gap = p.gap > 0;

    json doc;
    doc["name"] = "minicore-rect";

    // Materials
    json mats = json::array();
    for (size_type z = 0; z < nzones; ++z)
    {
        real_type const scale = p.zoning[std::min<size_type>(z, p.zoning.size() - 1)];
        mats.push_back(fuel_material("fuel_z" + std::to_string(z), scale));
    }
    mats.push_back(clad_material());
    mats.push_back(moderator_material());
    doc["materials"] = mats;

    // Surfaces
    json surfs = json::array();
    for (size_type i = 0; i < r; ++i)
    {
        surfs.push_back({{"name", "cyl" + std::to_string(i)},
                         {"type", "cylinder_z"},
                         {"x0", 0.0},
                         {"y0", 0.0},
                         {"r", p.radii[i]}});
    }
    surfs.push_back(plane('x', "pin_xlo", -p.pitch / 2));
    surfs.push_back(plane('x', "pin_xhi", p.pitch / 2));
    surfs.push_back(plane('y', "pin_ylo", -p.pitch / 2));
    surfs.push_back(plane('y', "pin_yhi", p.pitch / 2));
    for (size_type k = 0; k <= s; ++k)
    {
        surfs.push_back(plane('z', zname(k), -half_h + p.height * k / s));
    }
    if (has_gap)
    {
        surfs.push_back(plane('x', "x_m_g", -p.gap / 2));
        surfs.push_back(plane('x', "x_p_g", p.gap / 2));
        surfs.push_back(plane('y', "y_m_g", -p.gap / 2));
        surfs.push_back(plane('y', "y_p_g", p.gap / 2));
        surfs.push_back(plane('x', "x_m_w", -width / 2));
        surfs.push_back(plane('x', "x_p_w", width / 2));
        surfs.push_back(plane('y', "y_m_w", -width / 2));
        surfs.push_back(plane('y', "y_p_w", width / 2));
    }
    doc["surfaces"] = surfs;

    // Pin universes, one per fuel zone
    std::vector<std::string> const box{"+pin_xlo", "-pin_xhi", "+pin_ylo", "-pin_yhi"};
    json universes = json::array();
    for (size_type z = 0; z < nzones; ++z)
    {
        json cells = json::array();
        for (size_type k = 0; k < s; ++k)
        {
            cells.push_back({{"name", "fuel_" + std::to_string(k)},
                             {"region", concat({"-cyl0"}, slab(k))},
                             {"material", "fuel_z" + std::to_string(z)}});
            for (size_type i = 1; i < r; ++i)
            {
                cells.push_back({{"name", "clad" + std::to_string(i) + "_" + std::to_string(k)},
                                 {"region",
                                  concat({"+cyl" + std::to_string(i - 1),
                                          "-cyl" + std::to_string(i)},
                                         slab(k))},
                                 {"material", "clad"}});
            }
            cells.push_back({{"name", "mod_" + std::to_string(k)},
                             {"region",
                              concat(concat({"+cyl" + std::to_string(r - 1)}, box),
                                     slab(k))},
                             {"material", "moderator"}});
        }
        universes.push_back({{"name", "pin_z" + std::to_string(z)}, {"cells", cells}});
    }

    // Gap pins: vertical strip, horizontal strip, corner
    struct GapShape
    {
        char const* tag;
        std::vector<std::string> region;
        real_type wx;
        real_type wy;
    };
    std::vector<GapShape> const shapes{
        {"v", {"+x_m_g", "-x_p_g", "+y_m_w", "-y_p_w"}, p.gap, width},
        {"h", {"+x_m_w", "-x_p_w", "+y_m_g", "-y_p_g"}, width, p.gap},
        {"c", {"+x_m_g", "-x_p_g", "+y_m_g", "-y_p_g"}, p.gap, p.gap}};
    json arrays = json::array();
    if (has_gap)
    {
        for (auto const& g : shapes)
        {
            json cells = json::array();
            for (size_type k = 0; k < s; ++k)
            {
                cells.push_back({{"name", "gap_" + std::to_string(k)},
                                 {"region", concat(g.region, slab(k))},
                                 {"material", "moderator"}});
            }
            universes.push_back(
                {{"name", std::string("gap_pin_") + g.tag}, {"cells", cells}});
            arrays.push_back(
                {{"name", std::string("gap_assembly_") + g.tag},
                 {"type", "rect"},
                 {"edges",
                  {{"x", {-g.wx / 2, g.wx / 2}},
                   {"y", {-g.wy / 2, g.wy / 2}},
                   {"z", {-half_h, half_h}}}},
                 {"fill", std::string("gap_pin_") + g.tag}});
        }
    }
    doc["universes"] = universes;

    // Assemblies
    for (size_type z = 0; z < nzones; ++z)
    {
        auto const e = uniform_edges(-width / 2, p.pitch, m);
        arrays.push_back({{"name", "assembly_z" + std::to_string(z)},
                          {"type", "rect"},
                          {"edges", {{"x", e}, {"y", e}, {"z", {-half_h, half_h}}}},
                          {"fill", "pin_z" + std::to_string(z)}});
    }

    // Core
    auto zone_of = [n](size_type i, size_type j) {
        auto const di = static_cast<size_type>(std::abs(int(2 * i) - int(n - 1)));
        auto const dj = static_cast<size_type>(std::abs(int(2 * j) - int(n - 1)));
        return std::max(di, dj) / 2;
    };
    std::vector<real_type> core_edges{0};
    size_type const ncore = has_gap ? 2 * n + 1 : n;
    for (size_type i = 0; i < ncore; ++i)
    {
        bool const gap_col = has_gap && i % 2 == 0;
        core_edges.push_back(core_edges.back() + (gap_col ? p.gap : width));
    }
    std::vector<std::string> fill;
    for (size_type j = 0; j < ncore; ++j)
    {
        for (size_type i = 0; i < ncore; ++i)
        {
            bool const gi = has_gap && i % 2 == 0;
            bool const gj = has_gap && j % 2 == 0;
            if (gi && gj)
            {
                fill.push_back("gap_assembly_c");
            }
            else if (gi)
            {
                fill.push_back("gap_assembly_v");
            }
            else if (gj)
            {
                fill.push_back("gap_assembly_h");
            }
            else
            {
                size_type const ai = has_gap ? (i - 1) / 2 : i;
                size_type const aj = has_gap ? (j - 1) / 2 : j;
                fill.push_back("assembly_z" + std::to_string(zone_of(ai, aj)));
            }
        }
    }
    arrays.push_back({{"name", "core"},
                      {"type", "rect"},
                      {"edges", {{"x", core_edges}, {"y", core_edges}, {"z", {0.0, p.height}}}},
                      {"fill", fill}});
    doc["arrays"] = arrays;
    doc["root"] = "core";
    doc["boundary"] = "vacuum";

    real_type const side = core_edges.back();
    doc["run"] = {{"histories", 10000},
                  {"inactive", 5},
                  {"active", 5},
                  {"seed", 20240611},
                  {"strategy", "dp"},
                  {"driver", "history"},
                  {"workers", 1},
                  {"mesh",
                   {{"lo", {0.0, 0.0, 0.0}},
                    {"hi", {side, side, p.height}},
                    {"dims", {n * m, n * m, s}}}}};

    // Closed-form counts
    size_type const zc = nzones;
    size_type universes_n = 2 * zc + 1;
    size_type cells_n = zc * (r + 1) * s + zc * m * m + ncore * ncore;
    size_type surfaces_n = zc * (r + s + 5) + zc * (2 * m + 4) + (2 * (ncore + 1) + 2);
    if (has_gap)
    {
        universes_n += 6;
        cells_n += 3 * s + 3;
        surfaces_n += 3 * (s + 5) + 18;
    }
    doc["manifest"] = {{"generator", "minicore-rect"},
                       {"params",
                        {{"assemblies", n},
                         {"pins", m},
                         {"pitch", p.pitch},
                         {"radii", p.radii},
                         {"slabs", s},
                         {"height", p.height},
                         {"gap", p.gap},
                         {"zoning", p.zoning}}},
                       {"zones", zc},
                       {"universes", universes_n},
                       {"cells", cells_n},
                       {"surfaces", surfaces_n}};
    return doc;
}

//---------------------------------------------------------------------------//
json generate_minicore_hex(HexCoreParams const& p)
{
    NMC_VALIDATE(p.rings >= 1, ConfigError, << "hex core needs rings >= 1");
    NMC_VALIDATE(p.pitch > 0 && p.height > 0 && p.slabs >= 1,
                 ConfigError,
                 << "hex core pitch, height, and slabs must be positive");
    NMC_VALIDATE(p.fuel_radius > 0 && p.fuel_radius < p.pitch / 2,
                 ConfigError,
                 << "invalid fuel radius: must be positive and less than half "
                    "the pitch");
    NMC_VALIDATE(!p.kinds.empty(), ConfigError, << "hex core needs pin kinds");
    for (auto const& k : p.kinds)
    {
        NMC_VALIDATE(k == "fuel" || k == "moderator" || k == "structure",
                     ConfigError,
                     << "unknown hex pin kind '" << k << "'");
    }
    size_type const s = p.slabs;
    real_type const half_h = p.height / 2;

    HexGridSpec spec;
    spec.pitch = p.pitch;
    spec.orientation = p.pointy_top ? HexOrientation::pointy_top
                                    : HexOrientation::flat_top;
    auto const normals = spec.face_normals();

    json doc;
    doc["name"] = "minicore-hex";
    doc["materials"] = {fuel_material("fuel", 1.0),
                        moderator_material(),
                        structure_material()};

    json surfs = json::array();
    surfs.push_back({{"name", "hcyl"},
                     {"type", "cylinder_z"},
                     {"x0", 0.0},
                     {"y0", 0.0},
                     {"r", p.fuel_radius}});
    std::vector<std::string> prism;
    for (int f = 0; f < 3; ++f)
    {
        auto const lo = "hp" + std::to_string(f) + "_lo";
        auto const hi = "hp" + std::to_string(f) + "_hi";
        surfs.push_back({{"name", lo},
                         {"type", "plane"},
                         {"normal", normals[f]},
                         {"d", -p.pitch / 2}});
        surfs.push_back({{"name", hi},
                         {"type", "plane"},
                         {"normal", normals[f]},
                         {"d", p.pitch / 2}});
        prism.push_back("+" + lo);
        prism.push_back("-" + hi);
    }
    for (size_type k = 0; k <= s; ++k)
    {
        surfs.push_back(plane('z', zname(k), -half_h + p.height * k / s));
    }
    doc["surfaces"] = surfs;

    json universes = json::array();
    {
        json cells = json::array();
        for (size_type k = 0; k < s; ++k)
        {
            cells.push_back({{"name", "fuel_" + std::to_string(k)},
                             {"region", concat({"-hcyl"}, slab(k))},
                             {"material", "fuel"}});
            cells.push_back({{"name", "mod_" + std::to_string(k)},
                             {"region", concat(concat({"+hcyl"}, prism), slab(k))},
                             {"material", "moderator"}});
        }
        universes.push_back({{"name", "hex_fuel"}, {"cells", cells}});
    }
    for (std::string const kind : {"moderator", "structure"})
    {
        json cells = json::array();
        for (size_type k = 0; k < s; ++k)
        {
            cells.push_back({{"name", kind + "_" + std::to_string(k)},
                             {"region", concat(prism, slab(k))},
                             {"material", kind}});
        }
        universes.push_back({{"name", "hex_" + kind}, {"cells", cells}});
    }
    doc["universes"] = universes;

    auto const layout = HexGridSpec::ring_layout(p.rings);
    std::vector<std::string> fill;
    for (auto const& c : layout)
    {
        auto const ring = static_cast<size_type>(hex_distance({0, 0}, c));
        fill.push_back("hex_" + p.kinds[std::min<size_type>(ring, p.kinds.size() - 1)]);
    }
    doc["arrays"] = {{{"name", "hexcore"},
                      {"type", "hex"},
                      {"pitch", p.pitch},
                      {"orientation", p.pointy_top ? "pointy_top" : "flat_top"},
                      {"rings", p.rings},
                      {"edges_z", {0.0, p.height}},
                      {"fill", fill}}};
    doc["root"] = "hexcore";
    doc["boundary"] = "vacuum";
    doc["run"] = {{"histories", 5000},
                  {"inactive", 10},
                  {"active", 10},
                  {"seed", 20240611},
                  {"strategy", "st"},
                  {"driver", "history"},
                  {"workers", 1}};

    size_type const nhex = layout.size();
    size_type const planes_per_family = p.rings == 1 ? 2 : 4 * p.rings - 1;
    doc["manifest"] = {{"generator", "minicore-hex"},
                       {"params",
                        {{"rings", p.rings},
                         {"pitch", p.pitch},
                         {"fuel_radius", p.fuel_radius},
                         {"slabs", s},
                         {"height", p.height},
                         {"kinds", p.kinds}}},
                       {"universes", 4},
                       {"cells", 4 * s + nhex},
                       {"surfaces", (7 + s + 1) + 2 * (6 + s + 1) + 3 * planes_per_family + 2},
                       {"hexes", nhex}};
    return doc;
}

//---------------------------------------------------------------------------//
namespace
{
json reflecting_box(json mat, real_type half)
{
    json doc;
    doc["materials"] = {mat};
    doc["surfaces"] = {plane('x', "xlo", -half),
                       plane('x', "xhi", half),
                       plane('y', "ylo", -half),
                       plane('y', "yhi", half),
                       plane('z', "zlo", -half),
                       plane('z', "zhi", half)};
    doc["universes"]
        = {{{"name", "box"},
            {"cells",
             {{{"name", "medium"},
               {"region", {"+xlo", "-xhi", "+ylo", "-yhi", "+zlo", "-zhi"}},
               {"material", mat.at("name")}}}}}};
    doc["root"] = "box";
    doc["boundary"] = "reflecting";
    doc["run"] = {{"histories", 100000},
                  {"inactive", 20},
                  {"active", 50},
                  {"seed", 20240611},
                  {"strategy", "dp"},
                  {"driver", "history"},
                  {"workers", 1},
                  {"mesh",
                   {{"lo", {-half, -half, -half}},
                    {"hi", {half, half, half}},
                    {"dims", {4, 4, 4}}}}};
    return doc;
}
}  // namespace

json generate_infinite_medium_1g()
{
    json doc = reflecting_box(
        material("medium", {1.0}, {{0.5}}, {0.5}, {1.0}, 2.5), 10.0);
    doc["name"] = "infinite-1g";
    return doc;
}

json generate_infinite_medium_2g()
{
    json doc = reflecting_box(material("medium",
                                       {0.6, 1.2},
                                       {{0.45, 0.1}, {0.0, 1.0}},
                                       {0.04, 0.3},
                                       {1.0, 0.0},
                                       2.5),
                              10.0);
    doc["name"] = "infinite-2g";
    doc["run"]["histories"] = 20000;
    doc["run"]["inactive"] = 10;
    doc["run"]["active"] = 40;
    return doc;
}

//---------------------------------------------------------------------------//
/*!
 * Expected fission yield per source neutron in an infinite medium.
 *
 * Solves (diag(sigma_t) - sigma_s) y = nu_sigma_f for the
 * yield y_g of a neutron entering group g, then weights by chi.
 */
real_type infinite_medium_k(json const& model)
{
    json const& m = model.at("materials").at(0);
    auto const st = m.at("sigma_t").get<std::vector<real_type>>();
    auto const ss = m.at("sigma_s").get<std::vector<std::vector<real_type>>>();
    auto const nsf = m.at("nu_sigma_f").get<std::vector<real_type>>();
    auto const chi = m.at("chi").get<std::vector<real_type>>();
    std::size_t const ng = st.size();

    // A y = b with A = diag(st) - ss, b = nsf
    std::vector<std::vector<real_type>> a(ng, std::vector<real_type>(ng + 1));
    for (std::size_t g = 0; g < ng; ++g)
    {
        for (std::size_t h = 0; h < ng; ++h)
        {
            a[g][h] = (g == h ? st[g] : 0) - ss[g][h];
        }
        a[g][ng] = nsf[g];
    }
    for (std::size_t c = 0; c < ng; ++c)
    {
        std::size_t piv = c;
        for (std::size_t row = c + 1; row < ng; ++row)
        {
            if (std::fabs(a[row][c]) > std::fabs(a[piv][c]))
            {
                piv = row;
            }
        }
        std::swap(a[c], a[piv]);
        NMC_VALIDATE(a[c][c] != 0, ConfigError, << "singular balance matrix");
        for (std::size_t row = 0; row < ng; ++row)
        {
            if (row == c)
            {
                continue;
            }
            real_type const f = a[row][c] / a[c][c];
            for (std::size_t col = c; col <= ng; ++col)
            {
                a[row][col] -= f * a[c][col];
            }
        }
    }
    real_type k = 0;
    for (std::size_t g = 0; g < ng; ++g)
    {
        k += chi[g] * a[g][ng] / a[g][g];
    }
    return k;
}

//---------------------------------------------------------------------------//
json generate_model(std::string const& name, json const& params)
{
    json const pr = params.is_null() ? json::object() : params;
    if (name == "minicore-rect")
    {
        RectCoreParams p;
        p.assemblies = pr.value("assemblies", p.assemblies);
        p.pins = pr.value("pins", p.pins);
        p.pitch = pr.value("pitch", p.pitch);
        p.radii = pr.value("radii", p.radii);
        p.slabs = pr.value("slabs", p.slabs);
        p.height = pr.value("height", p.height);
        p.gap = pr.value("gap", p.gap);
        p.zoning = pr.value("zoning", p.zoning);
        return generate_minicore_rect(p);
    }
    if (name == "minicore-hex")
    {
        HexCoreParams p;
        p.rings = pr.value("rings", p.rings);
        p.pitch = pr.value("pitch", p.pitch);
        p.fuel_radius = pr.value("fuel_radius", p.fuel_radius);
        p.slabs = pr.value("slabs", p.slabs);
        p.height = pr.value("height", p.height);
        p.kinds = pr.value("kinds", p.kinds);
        p.pointy_top = pr.value("pointy_top", p.pointy_top);
        return generate_minicore_hex(p);
    }
    if (name == "infinite-1g")
    {
        return generate_infinite_medium_1g();
    }
    NMC_VALIDATE(name == "infinite-2g",
                 ConfigError,
                 << "unknown generator '" << name
                 << "' (expected minicore-rect, minicore-hex, infinite-1g, "
                    "or infinite-2g)");
    return generate_infinite_medium_2g();
}

//---------------------------------------------------------------------------//
}  // namespace nestmc
