#pragma once
// Generated by make_golden.py (mpmath, 40 digits). Do not edit.

#include <complex>

namespace golden {

struct R1 { double x; double v; };
struct C1 { std::complex<double> z; std::complex<double> v; };
struct Lerch { std::complex<double> z; double s; double a; std::complex<double> v; };
struct En { int n; double x; double v; };
struct Alt { double a, b, c, v; };

inline constexpr R1 log_gamma_real[] = {
    {0.1, 2.2527126517342059599},
    {0.5, 0.57236494292470008707},
    {1, 0.0},
    {1.5, -0.12078223763524522235},
    {2.5, 0.28468287047291915963},
    {7.3, 7.1478925230222490328},
    {12, 17.502307845873885839},
    {50, 144.56574394634488601},
    {123.4, 469.33609744219055844},
};
inline constexpr C1 log_gamma_complex[] = {
    {{0.5, 1.0}, {-0.65279064420437291527, -0.95500772434256910956}},
    {{2.0, -3.0}, {-2.0928517530927333496, -2.3023965434668676262}},
    {{10.0, 10.0}, {8.2361317504487178437, 23.94870341378203736}},
    {{0.10000000000000000555, 5.0}, {-7.5785770217968981689, 2.4111873330382695306}},
    {{3.5, 0.25}, {1.1906613360600472404, 0.27607038986243616774}},
};
inline constexpr R1 digamma_real[] = {
    {0.1, -10.423754940411076795},
    {0.25, -4.2274535333762654081},
    {0.5, -1.9635100260214234794},
    {1, -0.57721566490153286061},
    {2, 0.42278433509846713939},
    {3.7, 1.1671535393615113859},
    {11, 2.3517525890667211076},
    {100, 4.6001618527380874002},
};
inline constexpr C1 digamma_complex[] = {
    {{0.5, 1.0}, {-0.051761650994412542793, 1.5649405178158792826}},
    {{3.0, -2.0}, {1.1645915153739775267, -0.67080728264223022839}},
    {{0.2000000000000000111, 0.10000000000000000555}, {-4.2816919865887244711, 2.1262003139161523102}},
    {{15.0, 4.0}, {2.7109783385511390068, 0.26907319665010407164}},
};
inline constexpr R1 trigamma_real[] = {
    {0.5, 4.9348022005446793094},
    {1, 1.6449340668482264365},
    {2, 0.64493406684822643647},
    {10, 0.10516633568168574612},
    {0.05, 401.53235734211511931},
};
inline constexpr Lerch lerch[] = {
    {{0.5, 0.0}, 2, 1, {1.1644810529300250118, 0.0}},
    {{-1.0, 0.0}, 2, 1, {0.82246703342411321824, 0.0}},
    {{1.0, 0.0}, 3, 1, {1.2020569031595942854, 0.0}},
    {{0.2999999999999999889, 0.0}, 1.5, 0.7, {1.8679251289720302547, 0.0}},
    {{-1.0, 0.0}, 1.5, 2.5, {0.16108668367034690952, 0.0}},
    {{0.0, 0.5}, 2, 1, {0.97444471658904471422, 0.11795014884313172691}},
    {{0.54030230586813976501, 0.84147098480789650488}, 2, 1, {1.0283495580322779349, 0.2750919539345001182}},
    {{0.5, 0.0}, 4, 1, {1.0349581233477987727, 0.0}},
    {{-1.0, 0.0}, 1, 1, {0.69314718055994530942, 0.0}},
    {{0.9000000000000000222, 0.2999999999999999889}, 3, 0.5, {8.3219023828190326068, 0.15658861336040667411}},
};
inline constexpr R1 zeta_values[] = {
    {2, 1.6449340668482264365},
    {3, 1.2020569031595942854},
    {4.5, 1.054707510761454264},
    {7, 1.0083492773819228268},
    {1.5, 2.6123753486854883433},
};
inline constexpr En expint_en[] = {
    {0, 0.5, 1.2130613194252668472},
    {1, 0.1, 1.8229239584193906661},
    {1, 2, 0.048900510708061119567},
    {2, 1, 0.14849550677592204792},
    {3, 5, 0.00087780089277063827336},
    {5, 0.7, 0.10195968068159110466},
    {1, 30, 3.0215520106888125448e-15},
    {4, 1, 0.086062491324560728252},
};
inline constexpr C1 expint_e1[] = {
    {{1.0, 0.0}, {0.21938393439552027368, 0.0}},
    {{0.5, 0.5}, {0.25786645713798380334, -0.39669043545581521376}},
    {{-2.0, 1.0}, {-4.0699809478939277423, 0.25935131621032838317}},
    {{5.0, -3.0}, {-0.00095963002614286653253, -0.00033500310361659393052}},
    {{-10.0, 0.10000000000000000555}, {-2482.3239846249173454, 216.82216509601119843}},
    {{20.0, 20.0}, {-2.3824537449367396579e-11, -6.6969873156525615158e-11}},
    {{0.010000000000000000208, -0.020000000000000000416}, {3.2333099544943701135, 1.0872488264115450535}},
    {{-3.0, -4.0}, {4.1540916516426898225, -1.1528259664345642385}},
    {{-25.0, 3.0}, {2877211882.5759242696, 785263046.32368340547}},
    {{-39.0, -1.0}, {-1281813764766163.702, -1885145233968308.4656}},
    {{-45.0, 0.5}, {-701386070846076047.3, 372872418066371887.97}},
    {{-60.0, -10.0}, {1.752801138241088874e+24, 7.5605475919591641921e+23}},
    {{-100.0, 0.0}, {-2.7155527448538798219e+41, -3.1415926535897932385}},
    {{-5.0, 0.0}, {-40.185275355803177455, -3.1415926535897932385}},
    {{-41.0, 0.0}, {-16006649143245041.111, -3.1415926535897932385}},
};
inline constexpr C1 expint_e1_scaled[] = {
    {{100.0, 1.0}, {0.0099009712386377011404, -0.000098048095332950195294}},
    {{-50.0, 1.0}, {-0.020408526341309254201, -0.00041687136955557841317}},
    {{800.0, -3.0}, {0.0012484238793854293256, 4.6757593874455574423e-6}},
    {{-4.0, 30.0}, {-0.0032919313473428028715, -0.032967831336685065421}},
    {{2.0, 2.0}, {0.22879818347191401286, -0.16968406001055811851}},
    {{-30.0, 0.2000000000000000111}, {-0.034525468325065647031, -0.00023874622161723505053}},
    {{-300.0, 1.0}, {-0.0033444818572926306641, -0.000011185810840971766553}},
    {{-45.0, -2.0}, {-0.022692589178397231106, 0.0010326278566187338459}},
};
inline constexpr Alt alt_log_product[] = {
    {3, 3, 1, 0.84121821700601680478},
    {1, 2, 1, 0.45158270528945486473},
    {2, 1, 3, -0.78318878541367355294},
    {1, 1.5, 0.5, 0.78318878541367355294},
    {5, 7, 2, 0.91695523936413564639},
};

inline constexpr double euler_gamma = 0.57721566490153286061;
inline constexpr double catalan = 0.91596559417721901505;
inline constexpr double zeta3 = 1.2020569031595942854;
inline constexpr double zeta7 = 1.0083492773819228268;
inline constexpr double log2 = 0.69314718055994530942;
inline constexpr double t1_ex3 = 0.0290392279127452011;
inline constexpr double t2_ex3 = 4.4533471802741658658e-7;
inline constexpr double cor1_coth = 1.0766740474685811741;
inline constexpr double gs_t6_pi = 3.4678919493596441503;
inline constexpr double gamma16 = 0.84121821700601680478;
inline constexpr double t99_n2 = 0.19269472464638814868;
inline constexpr double n2015_log_abs = -705.60708889714343419;
inline constexpr double t1_ex2_re = 0.033360881770530021446;
inline constexpr double t1_ex2_neg_im = 0.13491916931127771249;
inline constexpr R1 t99[] = {
    {2, 0.19269472464638814868},
    {3, 0.10547895651520888849},
    {4, 0.064231574882129382894},
    {5, 0.042427632849334567846},
};
inline constexpr R1 ram2_limit[] = {
    {1, 0.78539816339744830962},
    {1.5, 1.0},
    {2.25, 1.2580472464723718178},
};
inline constexpr R1 ram2_a1_finite[] = {
    {1, 1.5707963267948966192},
    {2, 1.0471975511965977462},
    {3, 0.94247779607693797154},
    {8, 0.83775804095727819692},
};
// sum (+-1)^n psi(n/q) / (n (second ? n + shift : 1))
struct PsiSum { double q; bool alternating; bool second; double shift; double v; };
inline constexpr PsiSum psi_sums[] = {
    {1, false, true, 1, 0.42278433509846713939},
    {2, false, true, 1, -0.70260274566796072175},
    {4, false, true, 1, -2.3720350068423599255},
    {1, true, false, 0, 0.64032191766063239642},
    {2, true, false, 0, 1.703015458043846327},
    {4, true, false, 0, 3.5026725269746955274},
    {1, false, true, 0, 0.25257519204461276085},
    {1, false, true, 2, 0.44208825132385035455},
    {2, false, true, 2, -0.37605892923609495487},
    {4, false, true, 2, -1.5691319515144810063},
};

}  // namespace golden
