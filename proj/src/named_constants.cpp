// Copyright 2026 The dirp Authors
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

#include "named_constants.hpp"

namespace dirp::detail {

// 1000 fractional digits, rounded to nearest. Generated with mpmath
// (mp.dps = 1030, mp.e / mp.pi / mp.log(2)) and cross-checked against MPFR's
// own evaluation in tests/test_direction.cpp.

const char* const kEDigits =
    "2.71828182845904523536028747135266249775724709369995957496696762772407663035"
    "3547594571382178525166427427466391932003059921817413596629043572900334295260"
    "5956307381323286279434907632338298807531952510190115738341879307021540891499"
    "3488416750924476146066808226480016847741185374234544243710753907774499206955"
    "1702761838606261331384583000752044933826560297606737113200709328709127443747"
    "0472306969772093101416928368190255151086574637721112523897844250569536967707"
    "8544996996794686445490598793163688923009879312773617821542499922957635148220"
    "8269895193668033182528869398496465105820939239829488793320362509443117301238"
    "1970684161403970198376793206832823764648042953118023287825098194558153017567"
    "1736133206981125099618188159304169035159888851934580727386673858942287922849"
    "9892086805825749279610484198444363463244968487560233624827041978623209002160"
    "9902353043699418491463140934317381436405462531520961836908887070167683964243"
    "7814059271456354906130310720851038375051011574770417189861068739696552126715"
    "46889570350354";

const char* const kPiDigits =
    "3.14159265358979323846264338327950288419716939937510582097494459230781640628"
    "6208998628034825342117067982148086513282306647093844609550582231725359408128"
    "4811174502841027019385211055596446229489549303819644288109756659334461284756"
    "4823378678316527120190914564856692346034861045432664821339360726024914127372"
    "4587006606315588174881520920962829254091715364367892590360011330530548820466"
    "5213841469519415116094330572703657595919530921861173819326117931051185480744"
    "6237996274956735188575272489122793818301194912983367336244065664308602139494"
    "6395224737190702179860943702770539217176293176752384674818467669405132000568"
    "1271452635608277857713427577896091736371787214684409012249534301465495853710"
    "5079227968925892354201995611212902196086403441815981362977477130996051870721"
    "1349999998372978049951059731732816096318595024459455346908302642522308253344"
    "6850352619311881710100031378387528865875332083814206171776691473035982534904"
    "2875546873115956286388235378759375195778185778053217122680661300192787661119"
    "59092164201989";

const char* const kLog2Digits =
    "0.69314718055994530941723212145817656807550013436025525412068000949339362196"
    "9694715605863326996418687542001481020570685733685520235758130557032670751635"
    "0759619307275708283714351903070386238916734711233501153644979552391204751726"
    "8157493206515552473413952588295045300709532636664265410423915781495204374043"
    "0385500801944170641671518644712839968171784546957026271631064546150257207402"
    "4816377733896385506952606683411372738737229289564935470257626520988596932019"
    "6505855476470330679365443254763274495125040606943814710468994650622016772042"
    "4524529612687946546193165174681392672504103802546259656869144192871608293803"
    "1727143677826548775664850856740776484514644399404614226031930967354025744460"
    "7030809608504748663852313818167675143866747664789088143714198549423151997354"
    "8803751658612753529166100071053558249879414729509293113897155998205654392871"
    "7000721808576102523688921324497138932037843935308877482597017155910708823683"
    "6275898425891853530243634214367061189236789192372314672321720534016492568727"
    "47782344535348";

}  // namespace dirp::detail
