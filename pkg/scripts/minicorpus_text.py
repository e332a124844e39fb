"""Source texts of the bundled mini-corpus (5 topics x 10 documents).

Run ``python scripts/build_minicorpus.py`` to regenerate the files under
``src/seraeval/data/minicorpus``.
"""

TOPICS = {
    "idh": {
        "title": "IDH1 and IDH2 mutations reshape the glioma epigenome",
        "article": """
Mutations in isocitrate dehydrogenase 1 and 2 (IDH1/2) are frequent in low grade gliomas and secondary glioblastomas.
The mutant enzymes gain a neomorphic activity and convert alpha ketoglutarate into the oncometabolite 2-hydroxyglutarate.
High levels of 2-hydroxyglutarate accumulate in tumor cells carrying the IDH1 R132H mutation.
The oncometabolite competitively inhibits alpha ketoglutarate-dependent enzymes such as the TET2 dioxygenase.
TET2 normally converts methylcytosine to hydroxymethylcytosine and thereby promotes DNA demethylation.
Inhibition of TET2 and histone demethylases leads to widespread DNA methylation at CpG islands.
This hypermethylation phenotype silences genes that control cell differentiation.
Glial progenitor cells with the mutation fail to differentiate and keep dividing.
We profiled DNA methylation in 80 glioma samples and found that IDH mutant tumors cluster together.
Patients whose tumors carry IDH mutations survive longer than patients with wild type tumors.
Cell mutation in IDH1 therefore marks a distinct molecular subtype of glioma.
Small molecule inhibitors of mutant IDH1 lower 2-hydroxyglutarate and restore differentiation in mouse models.
These findings link a metabolic enzyme mutation to epigenetic control of tumor growth.
""",
        "docs": [
            "Somatic IDH1 mutation at arginine 132 is an early event in the development of diffuse glioma. Sequencing of tumor samples shows the mutation in most low grade astrocytomas and oligodendrogliomas.",
            "The oncometabolite 2-hydroxyglutarate is produced by mutant isocitrate dehydrogenase. Magnetic resonance spectroscopy can detect 2-hydroxyglutarate in the brain of glioma patients without surgery.",
            "TET2 is an alpha ketoglutarate-dependent dioxygenase that oxidizes methylcytosine. Loss of TET2 function in blood progenitor cells causes myeloid expansion and leukemia.",
            "IDH2 mutations occur in acute myeloid leukemia and are mutually exclusive with TET2 mutations. Both lesions impair hydroxymethylcytosine production and block hematopoietic differentiation.",
            "A CpG island methylator phenotype defines a subgroup of gliomas with favorable survival. The phenotype is tightly associated with IDH mutation status.",
            "Histone demethylases of the jumonji family require alpha ketoglutarate as a cofactor. 2-hydroxyglutarate inhibits these demethylases and increases repressive histone methylation.",
            "Mutant IDH1 inhibitors reduce 2-hydroxyglutarate levels and slow the growth of glioma xenografts in mice. Clinical trials test these inhibitors in patients with recurrent glioma.",
            "Patients with IDH mutant glioblastoma are younger and live longer than patients with IDH wild type glioblastoma. IDH status is now part of the diagnostic classification of brain tumors.",
            "Isocitrate dehydrogenase enzymes catalyze the oxidative decarboxylation of isocitrate to alpha ketoglutarate in the citric acid cycle. The cytosolic IDH1 and mitochondrial IDH2 isoforms produce NADPH.",
        ],
        "golds": [
            "IDH1/2 mutations are common in gliomas. The mutant enzyme produces 2-hydroxyglutarate, which blocks the alpha ketoglutarate-dependent enzyme TET2. As a result DNA methylation rises and cell differentiation is blocked, a cell mutation that defines a glioma subtype with better survival.",
            "Mutant isocitrate dehydrogenase 1 and 2 make the oncometabolite 2-hydroxyglutarate. This metabolite inhibits TET2 and causes DNA methylation of CpG islands in glioma cells. The cell mutation marks patients who survive longer, and IDH1 inhibitors restore differentiation in mouse models.",
        ],
        "nuggets": [
            ("n1", "IDH1/2", 2),
            ("n2", "isocitrate dehydrogenase 1 & 2", 1),
            ("n3", "alpha ketoglutarate-dependent enzyme", 1),
            ("n4", "TET2", 2),
            ("n5", "cell mutation", 2),
            ("n6", "DNA methylation", 2),
            ("n7", "2-hydroxyglutarate", 2),
            ("n8", "cell differentiation", 1),
            ("n9", "survival", 1),
        ],
    },
    "mirna": {
        "title": "A genetic screen of endogenous small RNAs in tumorigenesis",
        "article": """
Endogenous small RNAs called microRNAs regulate gene expression by binding to target messenger RNAs.
Each miRNA can repress hundreds of transcripts and thereby control whole pathways.
We performed a genetic screen to find the miRNAs that are related to tumorigenesis.
A library of miRNA expression vectors was introduced into primary fibroblasts together with an activated RAS oncogene.
Cells that escaped senescence and formed colonies were recovered and the integrated miRNAs were sequenced.
Two miRNA clusters allowed transformed cells to proliferate despite an intact p53 pathway.
These oncogenic miRNAs target LATS2, a kinase that normally restrains cell proliferation.
Expression of the two clusters is elevated in testicular germ cell tumors.
Tumors with high miRNA expression retained wild type p53, suggesting the miRNAs neutralize p53 signaling.
Antisense inhibitors that silence the miRNAs restored senescence in the transformed cells.
The screen demonstrates that miRNAs can act as oncogenes.
Functional screens complement expression profiling for identifying cancer related miRNAs.
""",
        "docs": [
            "MicroRNAs are short noncoding RNAs of about 22 nucleotides that guide the silencing complex to complementary messenger RNAs. Binding in the untranslated region represses translation and destabilizes the transcript.",
            "Expression profiling of microRNAs classifies human cancers by tissue of origin. Tumors generally show lower global miRNA expression than normal tissues.",
            "Oncogenic RAS induces premature senescence in primary human fibroblasts. Senescence is a barrier to tumorigenesis that depends on p53 and p16 signaling.",
            "LATS2 is a tumor suppressor kinase of the Hippo pathway. LATS2 restrains cell proliferation and is repressed in several tumors.",
            "Testicular germ cell tumors rarely carry p53 mutations. Alternative mechanisms must therefore inactivate p53 signaling in these tumors.",
            "Antisense oligonucleotides called antagomirs silence specific microRNAs in cells and in mice. Antagomir treatment reveals miRNA function in vivo.",
            "Retroviral libraries allow genetic screens for genes that bypass senescence. Integrated vectors in resistant colonies are identified by sequencing.",
            "The miR-17-92 cluster cooperates with MYC to accelerate lymphoma in mice. This cluster was the first microRNA described as an oncogene.",
            "Processing of primary miRNA transcripts requires the Drosha and Dicer enzymes. Loss of Dicer reduces mature miRNA levels and enhances tumor formation in some models.",
        ],
        "golds": [
            "A genetic screen of endogenous small RNAs identified miRNAs related to tumorigenesis. Two miRNA clusters let RAS transformed cells escape senescence by targeting the LATS2 kinase. These miRNAs behave as oncogenes in testicular germ cell tumors with wild type p53.",
            "Endogenous small RNAs (miRNA) were genetically screened and studied to find the miRNAs which are related to tumorigenesis. The screen found miRNA clusters that neutralize p53 signaling and repress LATS2. Silencing the miRNAs restored senescence, so miRNAs can act as oncogenes.",
        ],
        "nuggets": [
            ("n1", "endogenous small RNAs", 2),
            ("n2", "miRNA", 2),
            ("n3", "tumorigenesis", 2),
            ("n4", "genetic screen", 2),
            ("n5", "LATS2", 2),
            ("n6", "p53", 2),
            ("n7", "senescence", 2),
            ("n8", "oncogenes", 2),
            ("n9", "testicular germ cell tumors", 1),
        ],
    },
    "insulin": {
        "title": "Hepatic insulin resistance and lipid signaling",
        "article": """
Insulin resistance in the liver is a central defect in type 2 diabetes.
Insulin normally suppresses hepatic glucose production through the insulin receptor and AKT signaling.
In obesity, lipid intermediates such as diacylglycerol accumulate in liver cells.
Diacylglycerol activates protein kinase C epsilon, which binds the insulin receptor and impairs its kinase activity.
We studied rats fed a high fat diet for three days and measured hepatic glucose production during insulin clamps.
Rats on the diet developed hepatic insulin resistance before any weight gain or muscle insulin resistance.
Hepatic diacylglycerol content and membrane PKC epsilon rose in parallel with the defect.
Knockdown of PKC epsilon with antisense oligonucleotides protected the rats from hepatic insulin resistance.
Insulin receptor phosphorylation was restored in the knockdown animals.
Fasting glucose and insulin levels also improved after PKC epsilon knockdown.
These results place diacylglycerol and PKC epsilon upstream of the insulin receptor in fatty liver.
Lowering hepatic lipid may therefore prevent type 2 diabetes.
""",
        "docs": [
            "The insulin receptor is a tyrosine kinase that phosphorylates insulin receptor substrates. Downstream AKT signaling controls glucose uptake and glycogen synthesis.",
            "Nonalcoholic fatty liver disease is strongly associated with insulin resistance and type 2 diabetes. Hepatic lipid content predicts insulin sensitivity better than body weight.",
            "Hyperinsulinemic euglycemic clamps measure whole body and hepatic insulin sensitivity. Tracer infusion quantifies hepatic glucose production during the clamp.",
            "Protein kinase C isoforms are activated by diacylglycerol. Novel PKC isoforms link lipid accumulation to impaired insulin signaling in muscle and liver.",
            "Skeletal muscle accounts for most insulin stimulated glucose disposal. Intramyocellular lipid and PKC theta are associated with muscle insulin resistance.",
            "Antisense oligonucleotides reduce target gene expression in liver and fat with high efficiency. They are used to test the function of signaling proteins in rodents.",
            "High fat feeding rapidly induces hepatic steatosis in rats and mice. Short term diets separate hepatic defects from the effects of obesity.",
            "Ceramides are sphingolipids that also accumulate in obesity and impair AKT activation. Their role relative to diacylglycerol in hepatic insulin resistance remains debated.",
            "Metformin lowers hepatic glucose production and is the first line drug for type 2 diabetes. Its mechanism involves mitochondrial redox changes in liver cells.",
        ],
        "golds": [
            "Hepatic insulin resistance arises early in rats fed a high fat diet. Diacylglycerol accumulates in the liver and activates PKC epsilon, which impairs insulin receptor kinase activity. Knockdown of PKC epsilon prevents hepatic insulin resistance.",
            "Fat accumulation in the liver causes insulin resistance through diacylglycerol and PKC epsilon. Antisense knockdown of PKC epsilon restored insulin receptor signaling and glucose control. Reducing liver lipid could prevent type 2 diabetes.",
        ],
        "nuggets": [
            ("n1", "hepatic insulin resistance", 2),
            ("n2", "diacylglycerol", 2),
            ("n3", "PKC epsilon", 2),
            ("n4", "insulin receptor", 2),
            ("n5", "high fat diet", 1),
            ("n6", "knockdown", 2),
            ("n7", "type 2 diabetes", 1),
            ("n8", "glucose production", 1),
        ],
    },
    "crispr": {
        "title": "Programmable genome editing with CRISPR Cas9",
        "article": """
Bacteria defend against viruses with CRISPR loci that store fragments of viral DNA.
The Cas9 nuclease uses a guide RNA to recognize a complementary DNA sequence next to a PAM motif.
Cas9 then cuts both strands and creates a double strand break at the target site.
We engineered a single guide RNA that fuses the two natural RNA components.
The single guide RNA directed Cas9 to cleave chosen sites in plasmid DNA with high efficiency.
In human cells, Cas9 breaks are repaired by nonhomologous end joining or homology directed repair.
End joining introduces small insertions and deletions that disrupt the target gene.
Homology directed repair with a donor template enables precise editing of single bases.
Multiple guide RNAs allowed simultaneous editing of several genes in the same cells.
Off target cleavage occurred at sites with few mismatches to the guide sequence.
Shorter guides and engineered Cas9 variants reduced off target editing.
Programmable genome editing with Cas9 is simple, cheap and applicable to many organisms.
""",
        "docs": [
            "CRISPR arrays in bacterial genomes contain spacers derived from phage DNA. Transcribed CRISPR RNAs guide Cas proteins to destroy matching phage genomes.",
            "The protospacer adjacent motif is required for Cas9 to bind target DNA. Recognition of the PAM triggers local unwinding and RNA DNA hybrid formation.",
            "Double strand breaks in mammalian cells are mainly repaired by nonhomologous end joining. This pathway is error prone and creates insertions and deletions.",
            "Homology directed repair copies sequence from a donor template into the break site. Its efficiency is low in nondividing cells.",
            "Zinc finger nucleases and TALENs were earlier tools for targeted genome editing. Each new target required engineering a new protein.",
            "Genome wide off target profiling detects unintended Cas9 cleavage sites. High fidelity Cas9 variants reduce off target editing without losing activity.",
            "Base editors fuse a deaminase to a Cas9 nickase to change single bases without double strand breaks. They convert cytosine to thymine at the target site.",
            "Pooled CRISPR screens with guide RNA libraries identify genes required for cell survival. Guides depleted from the pool mark essential genes.",
            "Delivery of Cas9 and guide RNA into tissues uses viral vectors or lipid nanoparticles. Efficient delivery remains a barrier to therapeutic genome editing.",
        ],
        "golds": [
            "Cas9 is an RNA guided nuclease that creates a double strand break at a target DNA site next to a PAM. A single guide RNA makes the system programmable. Breaks are repaired by end joining or homology directed repair, enabling genome editing in human cells.",
            "The CRISPR Cas9 system uses a guide RNA to direct DNA cleavage. Repair of the double strand break disrupts genes or allows precise editing from a donor template. Off target cleavage can be reduced with engineered Cas9 variants.",
        ],
        "nuggets": [
            ("n1", "Cas9", 2),
            ("n2", "guide RNA", 2),
            ("n3", "double strand break", 2),
            ("n4", "PAM", 1),
            ("n5", "homology directed repair", 2),
            ("n6", "genome editing", 1),
            ("n7", "off target cleavage", 1),
            ("n8", "donor template", 1),
        ],
    },
    "microbiome": {
        "title": "Gut microbiota metabolites regulate colonic regulatory T cells",
        "article": """
The gut microbiota ferments dietary fiber into short chain fatty acids.
Butyrate, propionate and acetate are the most abundant short chain fatty acids in the colon.
Germ free mice have fewer colonic regulatory T cells than colonized mice.
We fed germ free mice short chain fatty acids in drinking water for three weeks.
Propionate and butyrate increased the number and suppressive function of colonic regulatory T cells.
The effect required the receptor FFAR2 on T cells.
Butyrate inhibited histone deacetylases and increased acetylation at the Foxp3 locus.
Higher Foxp3 expression stabilized the regulatory T cell program.
Mice given short chain fatty acids were protected from T cell transfer colitis.
Colonic inflammation and weight loss were reduced compared with untreated mice.
These findings show that microbial metabolites shape immune tolerance in the gut.
Dietary fiber and short chain fatty acids may help treat inflammatory bowel disease.
""",
        "docs": [
            "Anaerobic bacteria in the colon ferment dietary fiber. Fermentation produces short chain fatty acids that colonocytes use as energy.",
            "Regulatory T cells expressing Foxp3 suppress excessive immune responses. They are abundant in the colonic lamina propria.",
            "Germ free mice lack a microbiota and show defects in intestinal immune development. Colonization with defined bacteria restores many immune cell populations.",
            "FFAR2 and FFAR3 are G protein coupled receptors for short chain fatty acids. They are expressed on immune cells and enteroendocrine cells.",
            "Butyrate is a potent inhibitor of histone deacetylases. Increased histone acetylation changes gene expression in colonocytes and immune cells.",
            "Transfer of naive T cells into lymphopenic mice induces chronic colitis. The model is used to test regulatory T cell function.",
            "Inflammatory bowel disease patients have a less diverse gut microbiota. Butyrate producing bacteria are often depleted in patients with colitis.",
            "Clostridia clusters IV and XIVa induce colonic regulatory T cells in mice. Their effect depends on the fermentation products they release.",
            "High fiber diets increase short chain fatty acid levels in stool. Fiber supplementation has been tested as therapy for ulcerative colitis.",
        ],
        "golds": [
            "Short chain fatty acids made by the gut microbiota from dietary fiber expand colonic regulatory T cells. The effect needs FFAR2 and involves histone deacetylase inhibition at Foxp3. Treated mice were protected from colitis.",
            "Microbial metabolites such as butyrate and propionate increase the number and function of regulatory T cells in the colon. Short chain fatty acids raise Foxp3 expression and protect mice from colitis, suggesting therapy for inflammatory bowel disease.",
        ],
        "nuggets": [
            ("n1", "short chain fatty acids", 2),
            ("n2", "gut microbiota", 1),
            ("n3", "regulatory T cells", 2),
            ("n4", "FFAR2", 1),
            ("n5", "histone deacetylase", 1),
            ("n6", "Foxp3", 2),
            ("n7", "colitis", 2),
            ("n8", "dietary fiber", 1),
            ("n9", "butyrate", 1),
        ],
    },
}
