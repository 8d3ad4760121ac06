// Frozen reference values, regenerated by tools/make_oracle_constants.py.
// Do not edit by hand.
#pragma once

namespace oracle {
inline constexpr const char* kSqrt5 = "2.236067977499789696409173668731276235440618359611525724270897245410521";
inline constexpr const char* kTau = "1.61803398874989484820458683436563811772030917980576286213544862270526";
inline constexpr const char* kInvTau = "0.6180339887498948482045868343656381177203091798057628621354486227052605";
inline constexpr const char* kOneMinusInvTau = "0.3819660112501051517954131656343618822796908201942371378645513772947395";
inline constexpr const char* kLn2 = "0.6931471805599453094172321214581765680755001343602552541206800094933936";
inline constexpr const char* kLnTau = "0.4812118250596034474977589134243684231351843343856605196610181688401639";
inline constexpr const char* kE = "2.718281828459045235360287471352662497757247093699959574966967627724077";
inline constexpr const char* kExpHalf = "1.648721270700128146848650787814163571653776100710148011575079311640661";
inline constexpr const char* kExpThird = "1.395612425086089528628125319602586837597906515199406982617516706031739";
inline constexpr const char* kExpSixth = "1.181360412865645980305112152507184327830189310838963797856194280226455";
inline constexpr const char* kTauPowM97 = "0.00000000000000000000534809232253861142690784187300641420413804388519068722877975369175825";
inline constexpr const char* kTwoTauPowM97 = "0.0000000000000000000106961846450772228538156837460128284082760877703813744575595073835165";
inline constexpr const char* kLemma1PhiHalfK8 = "0.9976064899439374299697723592749165366684935256071933860737209394772301";
inline constexpr const char* kLemma1MuHalfK8 = "0.4999502127013174068701503055363490775874513686943885779862260391312717";
inline constexpr const char* kLemma2PhiK8 = "1.596911208347742919178409336815585463031290194746202686250623375663769";
inline constexpr const char* kLemma2MuK8 = "0.6177092835251911056454075335091510223124622911009478111671090706899073";
inline constexpr const char* kTheoremLogN10 = "0.9904796933384860359162520225857355335685596354704713443207189618764298";
inline constexpr const char* kTheoremProdN10 = "2.6925257492816626702834279942754209514748348560335576242309615483278";
inline constexpr const char* kTheoremProdN100AbsErr = "0.000000000000000000004048532807851625639860758653673186682216551110043988950065796588037124";
inline constexpr const char* kTheoremProdN200AbsErr = "4.253466962786073930786282429480594906064135301087476955561900589065521e-42";
}  // namespace oracle