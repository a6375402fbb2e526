#pragma once
// Generated by tests/oracles/gen_oracles.py; do not edit.

namespace oracle {

inline constexpr double psi_4_10 = 8.2419988491090166;
inline constexpr double upsilon_4_10 = 249.61890644793448;
inline constexpr double psi_5_30 = 15.537396797031404;
inline constexpr double upsilon_5_30 = 3370.9342889034215;
inline constexpr double psi_25_0p5 = 0.4700123896616184;
inline constexpr double upsilon_25_0p5 = 0.03797847254325578;

inline constexpr double zcr_slow_rbar_10 = 0.020509906618651309;
inline constexpr double zcr_slow_rbar_20 = 0.019299828096890445;
inline constexpr double zcr_slow_rbar_30 = 0.017483143245630384;
inline constexpr double zcr_slow_rbar_50 = 0.013778039743857152;
inline constexpr double zcr_slow_r003_7 = 0.029334492077338896;

inline constexpr double premium_cov_slow_10_rr = 0.00063212055882855799;
inline constexpr double premium_cov_slow_10_rs = 0.00087731070759494874;
inline constexpr double premium_cov_slow_10_ss = 0.019738206887064201;
inline constexpr double premium_cov_fast_10_rr = 0.00063212055882855799;
inline constexpr double premium_cov_fast_10_rs = 0.00036952725119027521;
inline constexpr double premium_cov_fast_10_ss = 0.0043262080530706501;

inline constexpr double gamma_r2_slow_nu1 = 0.0020500000000000002;
inline constexpr double gamma_S2_slow_nu1 = 0.00072222222222222219;
inline constexpr double a_nu_slow_nu1 = -0.00048333333333333334;
inline constexpr double b_nu_slow_nu1 = 0.058333333333333334;
inline constexpr double alpha_prime_slow_nu1 = -0.036666666666666667;
inline constexpr double disc_slow_nu1 = 1.3668873275945217e-06;
inline constexpr double lambda_sq_slow_nu1_0 = 0.0007737737123077106;
inline constexpr double lambda_sq_slow_nu1_1 = 0.0020208559173219192;
inline constexpr double disc_slow_nu10 = 1.1974543413937353e-07;
inline constexpr double lambda_sq_slow_nu10_0 = 0.0012757133430590483;
inline constexpr double lambda_sq_slow_nu10_1 = 0.001644825377479672;
inline constexpr double disc_fast_nu1 = 0.002188174178994261;
inline constexpr double lambda_sq_fast_nu1_0 = 0.0020490886515842723;
inline constexpr double lambda_sq_fast_nu1_1 = 0.051945540978045358;
inline constexpr double disc_fast_nu10 = 0.0015205508749107234;
inline constexpr double lambda_sq_fast_nu10_0 = 0.0016815223459650064;
inline constexpr double lambda_sq_fast_nu10_1 = 0.04327538001093735;

inline constexpr double mean_slow_nu0p1_h10 = 0.61484768720034111;
inline constexpr double var_slow_nu0p1_h10 = 0.44890208733770681;
inline constexpr double fr_slow_nu0p1_h10_t = -0.11136785571660641;
inline constexpr double fS_slow_nu0p1_h10_t = 0.27950692076855532;
inline constexpr double fr_slow_nu0p1_h10_mid = -0.10883388034371271;
inline constexpr double fS_slow_nu0p1_h10_mid = 0.27787927660943107;
inline constexpr double fr_slow_nu0p1_h10_s = -0.10567095386691171;
inline constexpr double fS_slow_nu0p1_h10_s = 0.27694833031996202;
inline constexpr double mean_slow_nu0p1_h30 = 1.8475302450651723;
inline constexpr double var_slow_nu0p1_h30 = 0.60543613250465234;
inline constexpr double fr_slow_nu0p1_h30_t = -0.11918699114638544;
inline constexpr double fS_slow_nu0p1_h30_t = 0.30003823604019636;
inline constexpr double fr_slow_nu0p1_h30_mid = -0.11425680784094107;
inline constexpr double fS_slow_nu0p1_h30_mid = 0.28712977242733628;
inline constexpr double fr_slow_nu0p1_h30_s = -0.10657736714247538;
inline constexpr double fS_slow_nu0p1_h30_s = 0.28146660614898017;
inline constexpr double mean_slow_nu1_h10 = 0.55659308472157787;
inline constexpr double var_slow_nu1_h10 = 0.19363357053390928;
inline constexpr double fr_slow_nu1_h10_t = -0.099577020155040344;
inline constexpr double fS_slow_nu1_h10_t = 0.18815728918450875;
inline constexpr double fr_slow_nu1_h10_mid = -0.084110411244635516;
inline constexpr double fS_slow_nu1_h10_mid = 0.18235597394427314;
inline constexpr double fr_slow_nu1_h10_s = -0.064906074632807495;
inline constexpr double fS_slow_nu1_h10_s = 0.17908326728471563;
inline constexpr double mean_slow_nu1_h30 = 1.7946145491509089;
inline constexpr double var_slow_nu1_h30 = 0.38094444957887558;
inline constexpr double fr_slow_nu1_h30_t = -0.14411009865731259;
inline constexpr double fS_slow_nu1_h30_t = 0.29520897284322151;
inline constexpr double fr_slow_nu1_h30_mid = -0.11770142928742362;
inline constexpr double fS_slow_nu1_h30_mid = 0.23648476656901299;
inline constexpr double fr_slow_nu1_h30_s = -0.072072412245363759;
inline constexpr double fS_slow_nu1_h30_s = 0.21145331636005874;
inline constexpr double mean_slow_nu10_h10 = 0.31228157513265081;
inline constexpr double var_slow_nu10_h10 = 0.0099083681555841158;
inline constexpr double fr_slow_nu10_h10_t = -0.085828368355488599;
inline constexpr double fS_slow_nu10_h10_t = 0.04353934924360172;
inline constexpr double fr_slow_nu10_h10_mid = -0.053388084464113084;
inline constexpr double fS_slow_nu10_h10_mid = 0.041188347358727749;
inline constexpr double fr_slow_nu10_h10_s = -0.013610913341922288;
inline constexpr double fS_slow_nu10_h10_s = 0.039881899127530991;
inline constexpr double mean_slow_nu10_h30 = 1.2364721951722062;
inline constexpr double var_slow_nu10_h30 = 0.056953208736307492;
inline constexpr double fr_slow_nu10_h30_t = -0.16955254699254907;
inline constexpr double fS_slow_nu10_h30_t = 0.13462217158864612;
inline constexpr double fr_slow_nu10_h30_mid = -0.11747373496376959;
inline constexpr double fS_slow_nu10_h30_mid = 0.092487229122038023;
inline constexpr double fr_slow_nu10_h30_s = -0.021866574075366699;
inline constexpr double fS_slow_nu10_h30_s = 0.075027540213171248;
inline constexpr double mean_fast_nu0p1_h10 = 0.61408063586223238;
inline constexpr double var_fast_nu0p1_h10 = 0.5519588884887765;
inline constexpr double fr_fast_nu0p1_h10_t = -0.11136533474511182;
inline constexpr double fS_fast_nu0p1_h10_t = 0.27254654457040045;
inline constexpr double fr_fast_nu0p1_h10_mid = -0.10853081169796805;
inline constexpr double fS_fast_nu0p1_h10_mid = 0.27443779417936182;
inline constexpr double fr_fast_nu0p1_h10_s = -0.10442180133900728;
inline constexpr double fS_fast_nu0p1_h10_s = 0.27212780662121888;
inline constexpr double mean_fast_nu0p1_h30 = 1.8428518599409252;
inline constexpr double var_fast_nu0p1_h30 = 1.6392825653556555;
inline constexpr double fr_fast_nu0p1_h30_t = -0.11918609056333659;
inline constexpr double fS_fast_nu0p1_h30_t = 0.2729466733698136;
inline constexpr double fr_fast_nu0p1_h30_mid = -0.11423721379946628;
inline constexpr double fS_fast_nu0p1_h30_mid = 0.27671269723202707;
inline constexpr double fr_fast_nu0p1_h30_s = -0.10397532016662875;
inline constexpr double fS_fast_nu0p1_h30_s = 0.27234168615933951;
inline constexpr double mean_fast_nu1_h10 = 0.53728501833040831;
inline constexpr double var_fast_nu1_h10 = 0.20234969786219675;
inline constexpr double fr_fast_nu1_h10_t = -0.099518469236189983;
inline constexpr double fS_fast_nu1_h10_t = 0.16175246275917898;
inline constexpr double fr_fast_nu1_h10_mid = -0.082765326199221806;
inline constexpr double fS_fast_nu1_h10_mid = 0.16814022212977231;
inline constexpr double fr_fast_nu1_h10_s = -0.060127291212979848;
inline constexpr double fS_fast_nu1_h10_s = 0.16034829346853319;
inline constexpr double mean_fast_nu1_h30 = 1.6204381015477083;
inline constexpr double var_fast_nu1_h30 = 0.64197951592025793;
inline constexpr double fr_fast_nu1_h30_t = -0.14395224570183127;
inline constexpr double fS_fast_nu1_h30_t = 0.16347319749452235;
inline constexpr double fr_fast_nu1_h30_mid = -0.11531796370952228;
inline constexpr double fS_fast_nu1_h30_mid = 0.17708057312496051;
inline constexpr double fr_fast_nu1_h30_s = -0.058666186346575083;
inline constexpr double fS_fast_nu1_h30_s = 0.1613568197678952;
inline constexpr double mean_fast_nu10_h10 = 0.29329328320890313;
inline constexpr double var_fast_nu10_h10 = 0.0082871437191641972;
inline constexpr double fr_fast_nu10_h10_t = -0.085776953889716498;
inline constexpr double fS_fast_nu10_h10_t = 0.032049980706303584;
inline constexpr double fr_fast_nu10_h10_mid = -0.052710743445290753;
inline constexpr double fS_fast_nu10_h10_mid = 0.034434261982678932;
inline constexpr double fr_fast_nu10_h10_s = -0.011515102368639712;
inline constexpr double fS_fast_nu10_h10_s = 0.031529905709773341;
inline constexpr double mean_fast_nu10_h30 = 0.83224330173467309;
inline constexpr double var_fast_nu10_h30 = 0.028734665317444008;
inline constexpr double fr_fast_nu10_h30_t = -0.16912149534586268;
inline constexpr double fS_fast_nu10_h30_t = 0.032883230591927812;
inline constexpr double fr_fast_nu10_h30_mid = -0.1137316123338743;
inline constexpr double fS_fast_nu10_h30_mid = 0.038400715818130607;
inline constexpr double fr_fast_nu10_h30_s = -0.010994151705965341;
inline constexpr double fS_fast_nu10_h30_s = 0.032056331644738437;

}  // namespace oracle
